#include "cleanring/cases.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cleanring/base_ring.hpp"

namespace cleanring {

std::string to_string(CleannessClass c) {
    switch (c) {
        case CleannessClass::Clean:
            return "clean";
        case CleannessClass::WeaklyCleanNotClean:
            return "weakly-clean-not-clean";
        case CleannessClass::FeeblyCleanNotWeaklyClean:
            return "feebly-clean-not-weakly-clean";
        case CleannessClass::NotFeeblyClean:
            return "not-feebly-clean";
    }
    return "?";
}

namespace {

Int mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

bool mod_in(Int a, Int m, std::initializer_list<Int> set) {
    Int r = mod(a, m);
    return std::find(set.begin(), set.end(), r) != set.end();
}

// n = 2^v2 * prod q_i^{r_i}, odd primes ascending.
struct NShape {
    int v2 = 0;
    std::vector<std::pair<Int, int>> odd;
};

NShape shape(Int n) {
    NShape s;
    for (auto [q, e] : factorize(n).factors) {
        if (q == 2)
            s.v2 = e;
        else
            s.odd.emplace_back(q, e);
    }
    return s;
}

// q^{eps(r)-1} (q-1)
Int phi_eps(Int q, int r) { return (r == 1 ? 1 : q) * (q - 1); }

// q^{r-1} (q-1)
Int phi_pow(Int q, int r) { return pow_checked(q, r - 1) * (q - 1); }

Int ord_eps(Int p, Int q, int r) { return mult_order(p, r == 1 ? q : q * q); }

bool primroot_eps(Int p, Int q, int r) { return ord_eps(p, q, r) == phi_eps(q, r); }

void check_odd_prime_coprime(Int n, Int p, const char* who) {
    if (n <= 0) throw std::invalid_argument(std::string(who) + ": n must be positive");
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
    if (n % p == 0) throw std::invalid_argument(std::string(who) + ": p must not divide n");
}

}  // namespace

int prop26_direct(Int n, Int p) {
    check_odd_prime_coprime(n, p, "prop26_direct");
    Int phi = euler_phi(n);
    Int o = mult_order(p, n);
    if (phi % o) return 0;
    Int k = phi / o;
    return (k == 1 || k == 2 || k == 4) ? int(k) : 0;
}

CaseMatch prop26_cases(Int n, Int p, int k) {
    check_odd_prime_coprime(n, p, "prop26_cases");
    if (k != 1 && k != 2 && k != 4) throw std::invalid_argument("prop26_cases: k must be 1, 2 or 4");
    if (mod(n, 4) == 2) n /= 2;  // phi and ord are unchanged
    NShape s = shape(n);

    if (k == 1) {
        if (n == 1 || n == 2) return {true, "1a"};
        if (n == 4 && mod(p, 4) == 3) return {true, "1b"};
        if (s.v2 == 0 && s.odd.size() == 1) {
            auto [q, r] = s.odd[0];
            if (primroot_eps(p, q, r)) return {true, "1c"};
        }
        return {};
    }

    if (k == 2) {
        if (n == 4 && mod(p, 4) == 1) return {true, "2a"};
        if (n == 8 && mod(p, 8) != 1) return {true, "2a"};
        if (s.v2 >= 4 && s.odd.empty() && mod_in(p, 16, {3, 13, 5, 11})) return {true, "2b"};
        if (s.v2 == 0 && s.odd.size() == 1) {
            auto [q, r] = s.odd[0];
            if (ord_eps(p, q, r) == phi_eps(q, r) / 2) return {true, "2c"};
        }
        if (s.v2 == 2 && s.odd.size() == 1) {
            auto [q, r] = s.odd[0];
            if (primroot_eps(p, q, r)) return {true, "2d"};
            if (mod(p, 4) == 3 && mod(q, 4) == 3 && ord_eps(p, q, r) == phi_eps(q, r) / 2)
                return {true, "2d"};
        }
        if (s.v2 == 0 && s.odd.size() == 2) {
            for (int swap = 0; swap < 2; ++swap) {
                auto [q1, r1] = s.odd[swap];
                auto [q2, r2] = s.odd[1 - swap];
                if (mod(q2, 4) != 3) continue;
                if (std::gcd(phi_eps(q1, r1), phi_eps(q2, r2)) != 2) continue;
                if (primroot_eps(p, q1, r1) && primroot_eps(p, q2, r2)) return {true, "2e"};
                if (primroot_eps(p, q1, r1) && ord_eps(p, q2, r2) == phi_eps(q2, r2) / 2)
                    return {true, "2e"};
            }
        }
        return {};
    }

    // k == 4
    if (n == 8 && mod(p, 8) == 1) return {true, "3a"};
    if (n == 16 && mod_in(p, 16, {7, 9, 15})) return {true, "3a"};
    if (s.v2 >= 5 && s.odd.empty() && mod_in(p, 32, {7, 25, 9, 23})) return {true, "3b"};
    if (s.v2 == 0 && s.odd.size() == 1) {
        auto [q, r] = s.odd[0];
        if (mod(q, 4) == 1 && ord_eps(p, q, r) == phi_eps(q, r) / 4) return {true, "3c"};
    }
    if (s.v2 == 0 && s.odd.size() == 2) {
        for (int swap = 0; swap < 2; ++swap) {
            auto [q1, r1] = s.odd[swap];
            auto [q2, r2] = s.odd[1 - swap];
            Int f1 = phi_eps(q1, r1), f2 = phi_eps(q2, r2);
            if (primroot_eps(p, q1, r1) && primroot_eps(p, q2, r2) && std::gcd(f1, f2) == 4)
                return {true, "3d.1"};
            if (primroot_eps(p, q1, r1) && ord_eps(p, q2, r2) == f2 / 2 && std::gcd(f1, f2 / 2) == 2)
                return {true, "3d.2"};
            if (ord_eps(p, q1, r1) == f1 / 2 && ord_eps(p, q2, r2) == f2 / 2 &&
                std::gcd(f1 / 2, f2 / 2) == 1)
                return {true, "3d.3"};
            if (f2 % 4 == 0 && primroot_eps(p, q1, r1) && ord_eps(p, q2, r2) == f2 / 4 &&
                std::gcd(f1, f2 / 4) == 1)
                return {true, "3d.4"};
        }
    }
    if (s.v2 == 0 && s.odd.size() == 3) {
        int idx[3] = {0, 1, 2};
        std::sort(idx, idx + 3);
        do {
            auto [q1, r1] = s.odd[idx[0]];
            auto [q2, r2] = s.odd[idx[1]];
            auto [q3, r3] = s.odd[idx[2]];
            Int f1 = phi_pow(q1, r1), f2 = phi_pow(q2, r2), f3 = phi_pow(q3, r3);
            bool g2 = std::gcd(f1, f2) == 2 && std::gcd(f1, f3) == 2 && std::gcd(f2, f3) == 2;
            if (!g2) continue;
            bool pr1 = is_primitive_root(p, pow_checked(q1, r1));
            bool pr2 = is_primitive_root(p, pow_checked(q2, r2));
            Int o3 = mult_order(p, pow_checked(q3, r3));
            Int o2 = mult_order(p, pow_checked(q2, r2));
            if (pr1 && pr2 && is_primitive_root(p, pow_checked(q3, r3))) return {true, "3e.1"};
            if (pr1 && pr2 && o3 == f3 / 2 && (f3 / 2) % 2 == 1) return {true, "3e.2"};
            if (pr1 && o2 == f2 / 2 && (f2 / 2) % 2 == 1 && o3 == f3 / 2 && (f3 / 2) % 2 == 1)
                return {true, "3e.3"};
        } while (std::next_permutation(idx, idx + 3));
    }
    if (s.v2 == 2 && s.odd.size() == 1) {
        auto [q, r] = s.odd[0];
        Int fr = phi_pow(q, r);
        Int o = mult_order(p, pow_checked(q, r));
        if (mod(p, 4) == 1 && o == fr / 2) return {true, "3f.1"};
        if (mod(p, 4) == 3 && mod(q, 4) == 1 && o == fr / 2) return {true, "3f.2"};
        if (mod(p, 4) == 3 && mod(q, 8) == 5 && o == fr / 4) return {true, "3f.3"};
    }
    if (s.v2 == 2 && s.odd.size() == 2) {
        for (int swap = 0; swap < 2; ++swap) {
            auto [q1, r1] = s.odd[swap];
            auto [q2, r2] = s.odd[1 - swap];
            if (mod(q2, 4) != 3) continue;
            Int f1 = phi_eps(q1, r1), f2 = phi_eps(q2, r2);
            if (std::gcd(f1, f2) == 2 && primroot_eps(p, q1, r1) && primroot_eps(p, q2, r2))
                return {true, "3g.1"};
            if (std::gcd(f1, f2) == 2 && primroot_eps(p, q1, r1) &&
                ord_eps(p, q2, r2) == f2 / 2)
                return {true, "3g.2"};
            Int g1 = phi_pow(q1, r1), g2p = phi_pow(q2, r2);
            if (mod(p, 4) == 3 && mod(q1, 4) == 3 &&
                mult_order(p, pow_checked(q1, r1)) == g1 / 2 &&
                mult_order(p, pow_checked(q2, r2)) == g2p / 2 &&
                std::gcd(g1 / 2, g2p / 2) == 1)
                return {true, "3g.3"};
        }
    }
    if (s.v2 == 3 && s.odd.size() == 1) {
        auto [q, r] = s.odd[0];
        if (is_primitive_root(p, pow_checked(q, r))) return {true, "3h.1"};
        if (mod(p, 8) != 1 && mod(q, 4) == 3 &&
            mult_order(p, pow_checked(q, r)) == phi_pow(q, r) / 2)
            return {true, "3h.2"};
    }
    if (s.v2 >= 4 && s.odd.size() == 1) {
        auto [q, r] = s.odd[0];
        if (mod(q, 4) == 3 && mod_in(p, 16, {3, 13, 5, 11}) &&
            (is_primitive_root(p, pow_checked(q, r)) ||
             mult_order(p, pow_checked(q, r)) == phi_pow(q, r) / 2))
            return {true, "3i"};
    }
    return {};
}

bool prop32_direct(Int n, Int p, int item) {
    check_odd_prime_coprime(n, p, "prop32_direct");
    Int phi = euler_phi(n);
    Int on = mult_order(p, n);
    auto proper_all = [&](auto&& pred) {
        for (Int m : divisors(n))
            if (m != n && !pred(m)) return false;
        return true;
    };
    switch (item) {
        case 1:
            return 2 * on == phi && on % 2 == 1;
        case 2:
            return 2 * on == phi &&
                   proper_all([&](Int m) { return mult_order(p, m) == euler_phi(m); });
        case 3:
            return 4 * on == phi && on % 2 == 1;
        case 4:
            return 4 * on == phi &&
                   proper_all([&](Int m) { return euler_phi(m) != 4 * mult_order(p, m); });
        case 5:
            return 4 * on == phi &&
                   proper_all([&](Int m) { return euler_phi(m) == mult_order(p, m); });
    }
    throw std::invalid_argument("prop32_direct: item must be in 1..5");
}

CaseMatch prop32_item(Int n, Int p, int item) {
    check_odd_prime_coprime(n, p, "prop32_item");
    NShape s = shape(n);

    if (item == 1) {
        if (n == 4 && mod(p, 4) == 1) return {true, "1a"};
        if (s.v2 <= 1 && s.odd.size() == 1) {
            auto [q, r] = s.odd[0];
            if (mod(q, 4) == 3 && ord_eps(p, q, r) == phi_eps(q, r) / 2) return {true, "1b"};
        }
        return {};
    }

    if (item == 2) {
        if (n == 4 && mod(p, 4) == 1) return {true, "2a"};
        if (n == 8 && mod(p, 4) == 3) return {true, "2a"};
        if (s.v2 == 0 && s.odd.size() == 1 && s.odd[0].second == 1) {
            Int q = s.odd[0].first;
            if (mult_order(p, q) == (q - 1) / 2) return {true, "2b"};
        }
        if (s.v2 == 2 && s.odd.size() == 1 && s.odd[0].second == 1) {
            Int q = s.odd[0].first;
            if (mod(p, 4) == 3 && is_primitive_root(p, q)) return {true, "2c"};
        }
        // n = q1 q2, two distinct primes (2 may be one of them, in which
        // case gcd(q-1, 1) = 1 and the case never fires)
        {
            std::vector<Int> qs;
            bool squarefree_shape = s.v2 <= 1;
            for (auto [q, r] : s.odd) {
                if (r != 1) squarefree_shape = false;
                qs.push_back(q);
            }
            if (s.v2 == 1) qs.push_back(2);
            if (squarefree_shape && qs.size() == 2) {
                Int q1 = qs[0], q2 = qs[1];
                if (is_primitive_root(p, q1) && is_primitive_root(p, q2) &&
                    std::gcd(q1 - 1, q2 - 1) == 2)
                    return {true, "2d"};
            }
        }
        return {};
    }

    if (item == 3) {
        if (n == 8 && mod(p, 8) == 1) return {true, "3a"};
        if (s.v2 <= 1 && s.odd.size() == 1) {
            auto [q, r] = s.odd[0];
            if (mod(q, 8) == 5 && ord_eps(p, q, r) == phi_eps(q, r) / 4) return {true, "3b"};
        }
        if (s.v2 <= 1 && s.odd.size() == 2) {
            for (int swap = 0; swap < 2; ++swap) {
                auto [q1, r1] = s.odd[swap];
                auto [q2, r2] = s.odd[1 - swap];
                if (mod(q1, 4) != 3 || mod(q2, 4) != 3) continue;
                Int f1 = phi_eps(q1, r1), f2 = phi_eps(q2, r2);
                // first sub-case is unsatisfiable as stated: gcd of an even
                // and an odd number cannot be 2; kept for completeness
                if (primroot_eps(p, q1, r1) && ord_eps(p, q2, r2) == f2 / 2 &&
                    std::gcd(f1, f2 / 2) == 2)
                    return {true, "3c.1"};
                if (ord_eps(p, q1, r1) == f1 / 2 && ord_eps(p, q2, r2) == f2 / 2 &&
                    std::gcd(f1 / 2, f2 / 2) == 1)
                    return {true, "3c.2"};
            }
        }
        if (s.v2 == 2 && s.odd.size() == 1) {
            auto [q, r] = s.odd[0];
            if (mod(q, 4) == 3 && mod(p, 4) == 1 &&
                mult_order(p, pow_checked(q, r)) == phi_pow(q, r) / 2)
                return {true, "3d"};
        }
        return {};
    }

    if (item == 4) {
        if (n == 8 && mod(p, 8) == 1) return {true, "4a"};
        // p = 9 (mod 16) fails its own divisor condition via m = 8
        // (phi(8) = 4 = 4 ord_8(p)); only 7 and 15 qualify.
        if (n == 16 && mod_in(p, 16, {7, 15})) return {true, "4a"};
        if (s.v2 == 0 && s.odd.size() == 1 && s.odd[0].second == 1) {
            Int q = s.odd[0].first;
            if (mod(q, 4) == 1 && mult_order(p, q) == (q - 1) / 4) return {true, "4b"};
        }
        if (s.v2 == 0 && s.odd.size() == 2 && s.odd[0].second == 1 && s.odd[1].second == 1) {
            for (int swap = 0; swap < 2; ++swap) {
                Int q1 = s.odd[swap].first, q2 = s.odd[1 - swap].first;
                if (is_primitive_root(p, q1) && is_primitive_root(p, q2) &&
                    std::gcd(q1 - 1, q2 - 1) == 4)
                    return {true, "4c.1"};
                if (is_primitive_root(p, q1) && mult_order(p, q2) == (q2 - 1) / 2 &&
                    std::gcd(q1 - 1, (q2 - 1) / 2) == 2)
                    return {true, "4c.2"};
                if (mult_order(p, q1) == (q1 - 1) / 2 && mult_order(p, q2) == (q2 - 1) / 2 &&
                    std::gcd((q1 - 1) / 2, (q2 - 1) / 2) == 1)
                    return {true, "4c.3"};
            }
        }
        if (s.v2 == 0 && s.odd.size() == 3 &&
            s.odd[0].second == 1 && s.odd[1].second == 1 && s.odd[2].second == 1) {
            int idx[3] = {0, 1, 2};
            std::sort(idx, idx + 3);
            do {
                Int q1 = s.odd[idx[0]].first, q2 = s.odd[idx[1]].first, q3 = s.odd[idx[2]].first;
                bool g2 = std::gcd(q1 - 1, q2 - 1) == 2 && std::gcd(q1 - 1, q3 - 1) == 2 &&
                          std::gcd(q2 - 1, q3 - 1) == 2;
                if (!g2) continue;
                if (is_primitive_root(p, q1) && is_primitive_root(p, q2) &&
                    is_primitive_root(p, q3))
                    return {true, "4d.1"};
                if (is_primitive_root(p, q1) && is_primitive_root(p, q2) &&
                    mult_order(p, q3) == (q3 - 1) / 2 && ((q3 - 1) / 2) % 2 == 1)
                    return {true, "4d.2"};
            } while (std::next_permutation(idx, idx + 3));
        }
        if (s.v2 == 2 && s.odd.size() == 1 && s.odd[0].second == 1) {
            Int q = s.odd[0].first;
            if (mod(p, 4) == 1 && mult_order(p, q) == (q - 1) / 2) return {true, "4e.1"};
            if (mod(p, 4) == 3 && mod(q, 4) == 1 && mult_order(p, q) == (q - 1) / 2)
                return {true, "4e.2"};
        }
        if (s.v2 == 2 && s.odd.size() == 2 && s.odd[0].second == 1 && s.odd[1].second == 1) {
            for (int swap = 0; swap < 2; ++swap) {
                Int q1 = s.odd[swap].first, q2 = s.odd[1 - swap].first;
                if (mod(q2, 4) != 3) continue;
                if (std::gcd(q1 - 1, q2 - 1) == 2 && is_primitive_root(p, q1) &&
                    is_primitive_root(p, q2))
                    return {true, "4f.1"};
                if (std::gcd(q1 - 1, q2 - 1) == 2 && mod(p, 4) == 3 && is_primitive_root(p, q1) &&
                    mult_order(p, q2) == (q2 - 1) / 2)
                    return {true, "4f.2"};
                // an ord_{q1 q2}(p) = phi(q1 q2)/4 sub-case cannot occur here:
                // the divisor m = q1 q2 would itself satisfy phi(m) = 4 ord_m(p)
            }
        }
        if (s.v2 == 3 && s.odd.size() == 1 && s.odd[0].second == 1) {
            Int q = s.odd[0].first;
            // p = 1 (mod 8) fails via m = 8; p = 1 (mod 4) fails via m = 4q
            if (mod(p, 8) != 1 && is_primitive_root(p, q)) return {true, "4g.1"};
            if (mod(p, 4) == 3 && mod(q, 4) == 3 && mult_order(p, q) == (q - 1) / 2)
                return {true, "4g.2"};
        }
        return {};
    }

    if (item == 5) {
        if (s.v2 == 0 && s.odd.size() == 1 && s.odd[0].second == 1) {
            Int q = s.odd[0].first;
            if (mod(q, 4) == 1 && mult_order(p, q) == (q - 1) / 4) return {true, "5.1"};
        }
        if (s.v2 == 0 && s.odd.size() == 2 && s.odd[0].second == 1 && s.odd[1].second == 1) {
            Int q1 = s.odd[0].first, q2 = s.odd[1].first;
            if (is_primitive_root(p, q1) && is_primitive_root(p, q2) &&
                std::gcd(q1 - 1, q2 - 1) == 4)
                return {true, "5.2"};
        }
        return {};
    }
    throw std::invalid_argument("prop32_item: item must be in 1..5");
}

// ---------------------------------------------------------------------------
// Characterization tables
// ---------------------------------------------------------------------------

TheoremVerdict thm1_verdict(Int p, const AbelianGroup& G) {
    Int n = G.exponent();
    check_odd_prime_coprime(std::max<Int>(n, 1), p, "thm1");
    Int on = mult_order(p, n);
    Int phi = euler_phi(n);
    if (on == phi) return {CleannessClass::Clean, "thm1.1", "thm1"};

    if (G.is_cyclic()) {
        NShape s = shape(n);
        if ((n == 4 && mod(p, 4) == 1) || (n == 8 && mod(p, 4) == 3))
            return {CleannessClass::WeaklyCleanNotClean, "thm1.3a", "thm1"};
        if (n % 2 == 1 && is_prime(n) && on == (n - 1) / 2)
            return {CleannessClass::WeaklyCleanNotClean, "thm1.3b", "thm1"};
        if (s.v2 == 2 && s.odd.size() == 1 && s.odd[0].second == 1) {
            // p = 3 (mod 4) is required: for p = 1 (mod 4) the divisor 4 is
            // not clean (ord_4(p) = 1 < phi(4)); prop32_item(2) case 2c
            // carries the same condition.
            if (mod(p, 4) == 3 && is_primitive_root(p, s.odd[0].first))
                return {CleannessClass::WeaklyCleanNotClean, "thm1.3c", "thm1"};
        }
        if (s.v2 == 0 && s.odd.size() == 2 && s.odd[0].second == 1 && s.odd[1].second == 1) {
            Int q1 = s.odd[0].first, q2 = s.odd[1].first;
            if (is_primitive_root(p, q1) && is_primitive_root(p, q2) &&
                std::gcd(q1 - 1, q2 - 1) == 2)
                return {CleannessClass::WeaklyCleanNotClean, "thm1.3d", "thm1"};
        }
    }
    if (phi == 2 * on) return {CleannessClass::FeeblyCleanNotWeaklyClean, "thm1.2", "thm1"};
    return {CleannessClass::NotFeeblyClean, "", "thm1"};
}

TheoremVerdict main1_verdict(Int m, Int p, const AbelianGroup& G) {
    Int n = G.exponent();
    check_odd_prime_coprime(std::max<Int>(n, 1), p, "main1");
    if (m <= 0 || m % p == 0) throw std::invalid_argument("main1: requires m >= 1 with p not dividing m");

    auto [n1, npr] = coprime_split(n, m);
    Int om = mult_order(p, m);
    Int phi_n1 = euler_phi(n1);
    Int o1 = mult_order(p, n1);
    Int o2 = mult_order(p, npr * m);
    Int L = std::lcm(o2, o1);

    if (npr * phi_n1 * om == L) return {CleannessClass::Clean, "main1.1", "main1"};

    bool case_a = o1 == phi_n1 && o2 == npr * om && std::gcd(o1, o2) == 2;
    bool case_b = phi_n1 % 2 == 0 && o1 == phi_n1 / 2 && o2 == npr * om && std::gcd(o1, o2) == 1;
    bool case_c = o1 == phi_n1 && (npr * om) % 2 == 0 && o2 == (npr * om) / 2 &&
                  std::gcd(o1, o2) == 1;

    bool phin_irreducible = npr * phi_n1 == euler_phi(n);
    if (G.is_cyclic() && phin_irreducible) {
        // the divisor quantifiers run over proper divisors d != n: the d = n
        // instance of case (a) would contradict its own gcd = 2 requirement
        auto proper = [&](auto&& pred) {
            for (Int d : divisors(n))
                if (d != n && !pred(d)) return false;
            return true;
        };
        if (case_a && proper([&](Int d) {
                auto [d1, dpr] = coprime_split(d, m);
                return std::gcd(mult_order(p, d1), mult_order(p, dpr * m)) == 1;
            }))
            return {CleannessClass::WeaklyCleanNotClean, "main1.3a", "main1"};
        if (case_b && proper([&](Int d) {
                Int d1 = coprime_split(d, m).n1;
                return mult_order(p, d1) == euler_phi(d1);
            }))
            return {CleannessClass::WeaklyCleanNotClean, "main1.3b", "main1"};
        if (o1 == phi_n1 && npr == 2 && mult_order(p, 2 * m) == om && std::gcd(o1, om) == 1)
            return {CleannessClass::WeaklyCleanNotClean, "main1.3c", "main1"};
    }

    if (npr * phi_n1 * om == 2 * L) {
        std::string label = case_a   ? "main1.2a"
                            : case_b ? "main1.2b"
                            : case_c ? "main1.2c"
                                     : "main1.2";
        return {CleannessClass::FeeblyCleanNotWeaklyClean, label, "main1"};
    }
    return {CleannessClass::NotFeeblyClean, "", "main1"};
}

TheoremVerdict main2_verdict(Int d, Int p, const AbelianGroup& G) {
    Int n = G.exponent();
    check_odd_prime_coprime(std::max<Int>(n, 1), p, "main2");
    Int disc = quadratic_discriminant(d);
    // the table assumes a nontrivial group; C_1 gives the base ring itself
    if (n == 1) return {CleannessClass::Clean, "main2.trivial", "main2"};

    int chi = legendre(disc, p);
    Int absD = disc < 0 ? -disc : disc;
    Int absd = d < 0 ? -d : d;
    NShape s = shape(n);
    Int on = mult_order(p, n);
    Int phi = euler_phi(n);
    bool cyclic = G.is_cyclic();
    BaseRing R = BaseRing::quadratic(d, p);
    bool phin_irreducible = R.cyclotomic_poly_irreducible(n);

    if (n % absD != 0) {
        // ------------------------------------------------ (1) Delta ∤ exp(G)
        if (on == phi && chi >= 0) return {CleannessClass::Clean, "main2.1.a.i", "main2.1"};
        if (n == 2 && chi == -1) return {CleannessClass::Clean, "main2.1.a.ii", "main2.1"};

        if (cyclic && phin_irreducible) {
            if (n == 4 && chi == -1)
                return {CleannessClass::WeaklyCleanNotClean, "main2.1.c.0", "main2.1"};
            if (chi >= 0) {
                if ((n == 4 && mod(p, 4) == 1) || (n == 8 && mod(p, 4) == 3))
                    return {CleannessClass::WeaklyCleanNotClean, "main2.1.c.i", "main2.1"};
                if (n % 2 == 1 && is_prime(n) && on == (n - 1) / 2)
                    return {CleannessClass::WeaklyCleanNotClean, "main2.1.c.ii", "main2.1"};
                if (s.v2 == 2 && s.odd.size() == 1 && s.odd[0].second == 1 &&
                    is_primitive_root(p, s.odd[0].first))
                    return {CleannessClass::WeaklyCleanNotClean, "main2.1.c.iii", "main2.1"};
                if (s.v2 == 0 && s.odd.size() == 2 && s.odd[0].second == 1 &&
                    s.odd[1].second == 1) {
                    Int q1 = s.odd[0].first, q2 = s.odd[1].first;
                    if (is_primitive_root(p, q1) && is_primitive_root(p, q2) &&
                        std::gcd(q1 - 1, q2 - 1) == 2)
                        return {CleannessClass::WeaklyCleanNotClean, "main2.1.c.iv", "main2.1"};
                }
            }
        }

        if (phi == 2 * on && chi >= 0)
            return {CleannessClass::FeeblyCleanNotWeaklyClean, "main2.1.b.i", "main2.1"};
        if (chi == -1 && phi % 2 == 0 && on == phi / 2 && on % 2 == 1)
            return {CleannessClass::FeeblyCleanNotWeaklyClean, "main2.1.b.ii", "main2.1"};
        if (n != 2 && on == phi && chi == -1)
            return {CleannessClass::FeeblyCleanNotWeaklyClean, "main2.1.b.iii", "main2.1"};
        return {CleannessClass::NotFeeblyClean, "", "main2.1"};
    }

    if (chi >= 0) {
        // --------------------------------- (2) Delta | exp(G), split/ramified
        const std::string reg = "main2.2";

        // (2.a) clean
        if (n == 8 && absD == 8 && absd == 2 && mod(p, 4) == 3)
            return {CleannessClass::Clean, "main2.2.a.i", reg};
        if (s.odd.empty() && s.v2 >= 4 && absD == 8 && absd == 2 && mod_in(p, 16, {3, 11}))
            return {CleannessClass::Clean, "main2.2.a.ii", reg};
        if (s.v2 <= 1 && s.odd.size() == 1) {
            auto [q, r] = s.odd[0];
            if (absD == q && absd == q && mod(d, 4) == 1 && ord_eps(p, q, r) == phi_eps(q, r) / 2)
                return {CleannessClass::Clean, "main2.2.a.iii", reg};
        }
        if (s.v2 == 2 && s.odd.size() == 1) {
            auto [q, r] = s.odd[0];
            if (absD == q && d == -q && mod(d, 4) == 1 && mod(p, 4) == 3 &&
                ord_eps(p, q, r) == phi_eps(q, r) / 2)
                return {CleannessClass::Clean, "main2.2.a.iv", reg};
            if (absD == 4 * q && absd == q && mod(d, 4) == 3 && mod(p, 4) == 3 &&
                primroot_eps(p, q, r))
                return {CleannessClass::Clean, "main2.2.a.v", reg};
        }
        if (s.v2 <= 1 && s.odd.size() == 2) {
            for (int swap = 0; swap < 2; ++swap) {
                auto [q1, r1] = s.odd[swap];
                auto [q2, r2] = s.odd[1 - swap];
                Int f1 = phi_eps(q1, r1), f2 = phi_eps(q2, r2);
                if (absD == q2 && d == -q2 && mod(d, 4) == 1 && primroot_eps(p, q1, r1) &&
                    ord_eps(p, q2, r2) == f2 / 2 && std::gcd(f1, f2) == 2)
                    return {CleannessClass::Clean, "main2.2.a.vi", reg};
                if (absD == q1 * q2 && absd == q1 * q2 && mod(d, 4) == 1 &&
                    primroot_eps(p, q1, r1) && primroot_eps(p, q2, r2) && std::gcd(f1, f2) == 2)
                    return {CleannessClass::Clean, "main2.2.a.vii", reg};
            }
        }

        // (2.c) weakly clean but not clean
        if (s.odd.empty() && s.v2 >= 3 && absD == 8 && absd == 2 && mod(p, 8) == 5 && cyclic &&
            R.cyclotomic_poly_irreducible(4))
            return {CleannessClass::WeaklyCleanNotClean, "main2.2.c.i", reg};
        if (s.v2 == 2 && s.odd.size() == 1) {
            auto [q, r] = s.odd[0];
            if (absD == 4 * q && absd == q && mod(d, 4) == 3 && mod(p, 4) == 1 &&
                primroot_eps(p, q, r) && G.cyclic_part_with_complement(2, 4, q) &&
                R.cyclotomic_poly_irreducible(4))
                return {CleannessClass::WeaklyCleanNotClean, "main2.2.c.ii", reg};
        }
        if (s.v2 <= 1 && s.odd.size() == 2) {
            for (int swap = 0; swap < 2; ++swap) {
                auto [q1, r1] = s.odd[swap];
                auto [q2, r2] = s.odd[1 - swap];
                if (r2 != 1) continue;
                if (absD == q1 * q2 && absd == q1 * q2 && mod(d, 4) == 1 &&
                    primroot_eps(p, q1, r1) && mult_order(p, q2) == (q2 - 1) / 2 &&
                    std::gcd(phi_eps(q1, r1), q2 - 1) == 2 &&
                    G.cyclic_part_with_complement(q2, q2, q1) &&
                    R.cyclotomic_poly_irreducible(q2))
                    return {CleannessClass::WeaklyCleanNotClean, "main2.2.c.iii", reg};
            }
        }
        if (cyclic && phin_irreducible) {
            if (s.odd.empty() && s.v2 == 3 && absD == 8 && absd == 2 && mod_in(p, 16, {7, 15}))
                return {CleannessClass::WeaklyCleanNotClean, "main2.2.c.iv.3", reg};
            if (s.v2 == 0 && s.odd.size() == 1 && s.odd[0].second == 1) {
                Int q = s.odd[0].first;
                if (disc == d && d == q && mod(q, 4) == 1 && mult_order(p, q) == (q - 1) / 4)
                    return {CleannessClass::WeaklyCleanNotClean, "main2.2.c.iv.1", reg};
            }
            if (s.v2 == 0 && s.odd.size() == 2 && s.odd[0].second == 1 && s.odd[1].second == 1) {
                Int q1 = s.odd[0].first, q2 = s.odd[1].first;
                if (disc == d && d == q1 * q2 && mod(q1, 4) == 1 && mod(q2, 4) == 1 &&
                    is_primitive_root(p, q1) && is_primitive_root(p, q2) &&
                    std::gcd(q1 - 1, q2 - 1) == 4)
                    return {CleannessClass::WeaklyCleanNotClean, "main2.2.c.iv.2", reg};
                for (int swap = 0; swap < 2; ++swap) {
                    Int qa = swap ? q2 : q1, qb = swap ? q1 : q2;
                    if (absD == qa && absd == qa && mod(d, 4) == 1 && is_primitive_root(p, qb) &&
                        mult_order(p, qa) == (qa - 1) / 2 &&
                        std::gcd((qa - 1) / 2, qb - 1) == 2)
                        return {CleannessClass::WeaklyCleanNotClean, "main2.2.c.iv.4", reg};
                }
            }
            if (s.v2 == 2 && s.odd.size() == 1 && s.odd[0].second == 1) {
                Int q = s.odd[0].first;
                if (absD == q && d == q && mod(d, 4) == 1 && mod(p, 4) == 3 &&
                    mult_order(p, q) == (q - 1) / 2)
                    return {CleannessClass::WeaklyCleanNotClean, "main2.2.c.iv.5", reg};
            }
        }

        // (2.b) feebly clean
        auto feebly2 = [&]() -> std::string {
            if (phi % 2 == 0 && on == phi / 2) return "main2.2.b.0";
            if (n == 8 && absD == 8 && absd == 2 && mod(p, 8) == 1) return "main2.2.b.i";
            if (s.odd.empty() && s.v2 >= 4 && absD == 8 && absd == 2 && mod(p, 16) == 9)
                return "main2.2.b.ii";
            if (s.v2 <= 1 && s.odd.size() == 1) {
                auto [q, r] = s.odd[0];
                if (mod(q, 4) == 1 && disc == d && d == q && ord_eps(p, q, r) == phi_eps(q, r) / 4)
                    return "main2.2.b.iii";
            }
            if (s.v2 <= 1 && s.odd.size() == 2) {
                for (int swap = 0; swap < 2; ++swap) {
                    auto [q1, r1] = s.odd[swap];
                    auto [q2, r2] = s.odd[1 - swap];
                    Int f1 = phi_eps(q1, r1), f2 = phi_eps(q2, r2);
                    if (primroot_eps(p, q1, r1) && primroot_eps(p, q2, r2) &&
                        std::gcd(f1, f2) == 4 && disc == d &&
                        (d == q1 || d == q2 || d == q1 * q2))
                        return "main2.2.b.iv.1";
                    if (primroot_eps(p, q1, r1) && ord_eps(p, q2, r2) == f2 / 2 &&
                        std::gcd(f1, f2 / 2) == 2 &&
                        (absD == q1 || absD == q2 || absD == q1 * q2) && disc == d &&
                        mod(d, 4) == 1)
                        return "main2.2.b.iv.2";
                    if (ord_eps(p, q1, r1) == f1 / 2 && ord_eps(p, q2, r2) == f2 / 2 &&
                        std::gcd(f1 / 2, f2 / 2) == 1 &&
                        (absD == q1 || absD == q2 || absD == q1 * q2) && disc == d &&
                        mod(d, 4) == 1)
                        return "main2.2.b.iv.3";
                    if (f2 % 4 == 0 && primroot_eps(p, q1, r1) && ord_eps(p, q2, r2) == f2 / 4 &&
                        std::gcd(f1, f2 / 4) == 1 && disc == d && d == q2)
                        return "main2.2.b.iv.4";
                }
            }
            if (s.v2 <= 1 && s.odd.size() == 3) {
                int idx[3] = {0, 1, 2};
                std::sort(idx, idx + 3);
                do {
                    auto [q1, r1] = s.odd[idx[0]];
                    auto [q2, r2] = s.odd[idx[1]];
                    auto [q3, r3] = s.odd[idx[2]];
                    Int f1 = phi_pow(q1, r1), f2 = phi_pow(q2, r2), f3 = phi_pow(q3, r3);
                    bool g2 = std::gcd(f1, f2) == 2 && std::gcd(f1, f3) == 2 &&
                              std::gcd(f2, f3) == 2;
                    if (!g2) continue;
                    bool inD7 = absD == q1 || absD == q2 || absD == q3 || absD == q1 * q2 ||
                                absD == q1 * q3 || absD == q2 * q3 || absD == q1 * q2 * q3;
                    bool pr1 = is_primitive_root(p, pow_checked(q1, r1));
                    bool pr2 = is_primitive_root(p, pow_checked(q2, r2));
                    Int o2v = mult_order(p, pow_checked(q2, r2));
                    Int o3v = mult_order(p, pow_checked(q3, r3));
                    if (pr1 && pr2 && is_primitive_root(p, pow_checked(q3, r3)) && inD7 &&
                        disc == d && mod(d, 4) == 1)
                        return "main2.2.b.v.1";
                    if (pr1 && pr2 && o3v == f3 / 2 && (f3 / 2) % 2 == 1 && inD7 && disc == d &&
                        mod(d, 4) == 1)
                        return "main2.2.b.v.2";
                    if (pr1 && o2v == f2 / 2 && (f2 / 2) % 2 == 1 && o3v == f3 / 2 &&
                        (f3 / 2) % 2 == 1 && disc == d &&
                        (d == -q2 || d == -q3 || d == q2 * q3))
                        return "main2.2.b.v.3";
                } while (std::next_permutation(idx, idx + 3));
            }
            if (s.v2 == 2 && s.odd.size() == 1) {
                auto [q, r] = s.odd[0];
                Int fr = phi_pow(q, r);
                Int o = mult_order(p, pow_checked(q, r));
                if (mod(p, 4) == 1 && o == fr / 2 &&
                    ((disc == d && absd == q && mod(d, 4) == 1) ||
                     (disc == 4 * d && absd == q && mod(d, 4) == 3)))
                    return "main2.2.b.vi.1";
                if (mod(p, 4) == 3 && mod(q, 4) == 1 && o == fr / 2 &&
                    ((disc == d && d == q) || (disc == 4 * d && d == -q)))
                    return "main2.2.b.vi.2";
                if (mod(p, 4) == 3 && mod(q, 8) == 5 && fr % 4 == 0 && o == fr / 4 && disc == d &&
                    d == q)
                    return "main2.2.b.vi.3";
            }
            if (s.v2 == 2 && s.odd.size() == 2) {
                for (int swap = 0; swap < 2; ++swap) {
                    auto [q1, r1] = s.odd[swap];
                    auto [q2, r2] = s.odd[1 - swap];
                    if (mod(q2, 4) != 3) continue;
                    Int f1 = phi_eps(q1, r1), f2 = phi_eps(q2, r2);
                    bool inD6 = absD == q1 || absD == q2 || absD == 4 * q1 || absD == 4 * q2 ||
                                absD == q1 * q2 || absD == 4 * q1 * q2;
                    if (std::gcd(f1, f2) == 2 && primroot_eps(p, q1, r1) &&
                        primroot_eps(p, q2, r2) && inD6 &&
                        ((disc == d && mod(d, 4) == 1) ||
                         (4 * d == disc && mod(d, 4) == 3)))
                        return "main2.2.b.vii.1";
                    if (std::gcd(f1, f2) == 2 && primroot_eps(p, q1, r1) &&
                        ord_eps(p, q2, r2) == f2 / 2 &&
                        ((mod(p, 4) == 3 && inD6) ||
                         (mod(p, 4) == 1 && (absD == q2 || absD == 4 * q2))))
                        return "main2.2.b.vii.2";
                    Int g1 = phi_pow(q1, r1), g2v = phi_pow(q2, r2);
                    if (mod(p, 4) == 3 && mod(q1, 4) == 3 &&
                        mult_order(p, pow_checked(q1, r1)) == g1 / 2 &&
                        mult_order(p, pow_checked(q2, r2)) == g2v / 2 &&
                        std::gcd(g1 / 2, g2v / 2) == 1 && disc == d &&
                        (d == -q1 || d == -q2 || d == q1 * q2))
                        return "main2.2.b.vii.3";
                }
            }
            if (s.v2 == 3 && s.odd.size() == 1) {
                auto [q, r] = s.odd[0];
                if (is_primitive_root(p, pow_checked(q, r)) &&
                    ((mod(p, 8) == 1 && absd == 2 && disc == 4 * d) ||
                     (mod(p, 8) != 1 && (absD == q || absD == 4 * q || absD == 8))))
                    return "main2.2.b.viii.1";
                if (mod(q, 4) == 3 && mult_order(p, pow_checked(q, r)) == phi_pow(q, r) / 2 &&
                    ((mod(p, 8) == 5 && (disc == 4 * q || disc == -q)) ||
                     (mod(p, 4) != 1 && (disc == -q || disc == 4 * q || disc == 8 || disc == -8))))
                    return "main2.2.b.viii.2";
            }
            if (s.v2 >= 4 && s.odd.size() == 1) {
                auto [q, r] = s.odd[0];
                if (mod(q, 4) == 3 && mod_in(p, 16, {3, 13, 5, 11}) &&
                    (absD == 8 || absD == q || absD == 4 * q) &&
                    (is_primitive_root(p, pow_checked(q, r)) ||
                     mult_order(p, pow_checked(q, r)) == phi_pow(q, r) / 2))
                    return "main2.2.b.ix";
            }
            return "";
        };
        std::string f = feebly2();
        if (!f.empty()) return {CleannessClass::FeeblyCleanNotWeaklyClean, f, reg};
        return {CleannessClass::NotFeeblyClean, "", reg};
    }

    // ------------------------------------------ (3) Delta | exp(G), inert
    const std::string reg = "main2.3";

    // (3.a) clean
    if (s.v2 <= 1 && s.odd.size() == 1) {
        auto [q, r] = s.odd[0];
        if (absD == q && absd == q && mod(d, 4) == 1) {
            if (primroot_eps(p, q, r)) return {CleannessClass::Clean, "main2.3.a", reg};
            if (mod(q, 4) == 3 && ord_eps(p, q, r) == phi_eps(q, r) / 2)
                return {CleannessClass::Clean, "main2.3.a", reg};
        }
    }

    // (3.c) weakly: requires Phi_q irreducible over the localization, which
    // cannot happen once Delta | q (the local degree halves); evaluated
    // literally, so this case never matches.
    if (cyclic && s.v2 == 0 && s.odd.size() == 1 && s.odd[0].second == 1) {
        Int q = s.odd[0].first;
        if (R.cyclotomic_poly_irreducible(q) && absD == q && d == q && mod(d, 4) == 1) {
            Int oq = mult_order(p, q);
            if ((4 * oq == q - 1 && oq % 2 == 1) || 2 * oq == q - 1)
                return {CleannessClass::WeaklyCleanNotClean, "main2.3.c", reg};
        }
    }

    // (3.b) feebly clean
    auto feebly3 = [&]() -> std::string {
        if (on == phi && n >= 3) return "main2.3.b.01";
        if (phi % 2 == 0 && on == phi / 2 && on % 2 == 1) return "main2.3.b.02";
        if (n == 8 && absD == 8 && absd == 2) return "main2.3.b.i";
        if (s.odd.empty() && s.v2 >= 4 && absD == 8 && absd == 2 && mod_in(p, 16, {3, 13, 5, 11}))
            return "main2.3.b.ii";
        if (s.v2 <= 1 && s.odd.size() == 1) {
            auto [q, r] = s.odd[0];
            if (mod(q, 4) == 1 && disc == d && d == q && ord_eps(p, q, r) == phi_eps(q, r) / 2)
                return "main2.3.b.iii";
            if (mod(q, 8) == 5 && disc == d && d == q && phi_eps(q, r) % 4 == 0 &&
                ord_eps(p, q, r) == phi_eps(q, r) / 4)
                return "main2.3.b.iv";
        }
        if (s.v2 == 2 && s.odd.size() == 1) {
            auto [q, r] = s.odd[0];
            bool second = mod(p, 4) == 3 && mod(q, 4) == 3 && ord_eps(p, q, r) == phi_eps(q, r) / 2;
            if (absD == q && absd == q && mod(d, 4) == 1 && (primroot_eps(p, q, r) || second))
                return "main2.3.b.v";
            if (absD == 4 * q && absd == q && mod(d, 4) == 3 && (primroot_eps(p, q, r) || second))
                return "main2.3.b.vi";
            if (disc == d && d == -q && mod(d, 4) == 1 && mod(p, 4) == 1 &&
                ord_eps(p, q, r) == phi_eps(q, r) / 2)
                return "main2.3.b.vii";
            if (disc == 4 * q && d == q && mod(d, 4) == 3 && mod(p, 4) == 1 &&
                ord_eps(p, q, r) == phi_eps(q, r) / 2)
                return "main2.3.b.viii";
        }
        if (s.v2 <= 1 && s.odd.size() == 2) {
            for (int swap = 0; swap < 2; ++swap) {
                auto [q1, r1] = s.odd[swap];
                auto [q2, r2] = s.odd[1 - swap];
                Int f1 = phi_eps(q1, r1), f2 = phi_eps(q2, r2);
                bool d_ok = absD == absd && mod(d, 4) == 1 &&
                            (absd == q1 || absd == q2 || absd == q1 * q2);
                if (mod(q2, 4) == 3 && std::gcd(f1, f2) == 2 && d_ok &&
                    ((primroot_eps(p, q1, r1) && primroot_eps(p, q2, r2)) ||
                     (primroot_eps(p, q1, r1) && ord_eps(p, q2, r2) == f2 / 2)))
                    return "main2.3.b.ix";
                Int g1 = phi_pow(q1, r1), g2v = phi_pow(q2, r2);
                if (mod(q1, 4) == 3 && mod(q2, 4) == 3 &&
                    ((primroot_eps(p, q1, r1) &&
                      mult_order(p, pow_checked(q2, r2)) == g2v / 2 &&
                      std::gcd(g1, g2v / 2) == 1) ||
                     (mult_order(p, pow_checked(q1, r1)) == g1 / 2 &&
                      mult_order(p, pow_checked(q2, r2)) == g2v / 2 &&
                      std::gcd(g1 / 2, g2v / 2) == 1)) &&
                    d_ok)
                    return "main2.3.b.x";
            }
        }
        return "";
    };
    std::string f = feebly3();
    if (!f.empty()) return {CleannessClass::FeeblyCleanNotWeaklyClean, f, reg};
    return {CleannessClass::NotFeeblyClean, "", reg};
}

}  // namespace cleanring
