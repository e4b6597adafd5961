#include "cleanring/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cleanring {

AbelianGroup AbelianGroup::normalize(const std::vector<Int>& orders) {
    // Split every cyclic factor into prime-power components, then regroup:
    // the k-th largest power of each prime lands in the k-th largest
    // invariant factor.
    std::map<Int, std::vector<int>> exps;
    for (Int o : orders) {
        if (o <= 0) throw std::invalid_argument("normalize: orders must be positive");
        for (auto [q, e] : factorize(o).factors) exps[q].push_back(e);
    }
    std::size_t k = 0;
    for (auto& [q, v] : exps) {
        std::sort(v.begin(), v.end(), std::greater<>());
        k = std::max(k, v.size());
    }
    AbelianGroup g;
    g.factors_.assign(k, 1);
    for (auto& [q, v] : exps)
        for (std::size_t i = 0; i < v.size(); ++i)
            g.factors_[k - 1 - i] *= pow_checked(q, v[i]);
    for (Int f : g.factors_) g.order_ *= f;
    if (k) g.exponent_ = g.factors_.back();
    return g;
}

AbelianGroup AbelianGroup::parse(const std::string& text) {
    std::vector<Int> orders;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        Int v;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("group: expected comma-separated integers");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size())
            throw std::invalid_argument("group: expected comma-separated integers");
        orders.push_back(v);
    }
    if (orders.empty()) throw std::invalid_argument("group: empty specification");
    return normalize(orders);
}

Int AbelianGroup::order_dividing_count(Int e) const {
    Int c = 1;
    for (Int f : factors_) c *= std::gcd(e, f);
    return c;
}

Int AbelianGroup::exact_order_count(Int d) const {
    Int total = 0;
    for (Int e : divisors(d)) {
        int mo = moebius(d / e);
        if (mo) total += mo * order_dividing_count(e);
    }
    return total;
}

Int AbelianGroup::cyclic_subgroup_count(Int d) const {
    if (d <= 0) throw std::invalid_argument("cyclic_subgroup_count: d must be positive");
    Int count = exact_order_count(d);
    Int phi = euler_phi(d);
    if (count % phi != 0)
        throw std::logic_error("cyclic_subgroup_count: element count not divisible by phi(d)");
    return count / phi;
}

bool AbelianGroup::cyclic_part_with_complement(Int q, Int s, Int qq) const {
    std::vector<Int> qparts;
    for (Int f : factors_) {
        Int qp = 1;
        while (f % q == 0) {
            f /= q;
            qp *= q;
        }
        if (qp > 1) qparts.push_back(qp);
        while (f % qq == 0) f /= qq;
        if (f != 1) return false;
    }
    return qparts.size() == 1 && qparts[0] == s;
}

std::string AbelianGroup::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(factors_[i]);
    }
    return out;
}

}  // namespace cleanring
