#include "grcat/group.hpp"

#include "grcat/errors.hpp"

#include <limits>
#include <sstream>

namespace grcat {

CyclicFactorization::CyclicFactorization(std::vector<std::int64_t> orders) {
    if (orders.empty())
        throw InvalidArgument("a factorization needs at least one cyclic factor");
    for (auto m : orders) {
        if (m < 2)
            throw InvalidArgument("cyclic factor orders must be >= 2, got " + std::to_string(m));
        if (group_order_ > std::numeric_limits<std::int64_t>::max() / m)
            throw InvalidArgument("group order overflows 64-bit integers");
        group_order_ *= m;
    }
    orders_ = std::make_shared<const std::vector<std::int64_t>>(std::move(orders));
}

std::string CyclicFactorization::to_string() const {
    std::string out;
    for (std::size_t l = 0; l < rank(); ++l) {
        if (l)
            out += 'x';
        out += "Z" + std::to_string(order(l));
    }
    return out;
}

GroupElement::GroupElement(const CyclicFactorization& group, std::vector<std::int64_t> exps)
    : group_(group), exps_(std::move(exps)) {
    if (exps_.size() != group_.rank())
        throw InvalidArgument("element has " + std::to_string(exps_.size()) +
                              " exponents, group " + group_.to_string() + " needs " +
                              std::to_string(group_.rank()));
    for (std::size_t l = 0; l < exps_.size(); ++l)
        exps_[l] = remainder(exps_[l], group_.order(l));
}

bool GroupElement::is_identity() const {
    for (auto e : exps_)
        if (e != 0)
            return false;
    return true;
}

std::string GroupElement::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t l = 0; l < exps_.size(); ++l)
        os << (l ? "," : "") << exps_[l];
    os << ')';
    return os.str();
}

GroupElement identity(const CyclicFactorization& group) {
    return GroupElement(group, std::vector<std::int64_t>(group.rank(), 0));
}

GroupElement generator(const CyclicFactorization& group, std::size_t l) {
    if (l >= group.rank())
        throw InvalidArgument("generator index out of range");
    std::vector<std::int64_t> e(group.rank(), 0);
    e[l] = 1;
    return GroupElement(group, std::move(e));
}

void require_same_group(const GroupElement& x, const GroupElement& y) {
    if (!(x.group() == y.group()))
        throw InvalidArgument("elements belong to different groups: " + x.group().to_string() +
                              " vs " + y.group().to_string());
}

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
    require_same_group(x, y);
    std::vector<std::int64_t> e(x.exps().begin(), x.exps().end());
    for (std::size_t l = 0; l < e.size(); ++l)
        e[l] += y.exp(l);
    return GroupElement(x.group(), std::move(e));
}

GroupElement power(const GroupElement& x, std::int64_t k) {
    std::vector<std::int64_t> e(x.exps().size());
    for (std::size_t l = 0; l < e.size(); ++l) {
        auto m = x.group().order(l);
        // exponent < m and |k mod m| < m, so the product cannot overflow for sane m
        e[l] = static_cast<std::int64_t>(
            (static_cast<__int128>(x.exp(l)) * remainder(k, m)) % m);
    }
    return GroupElement(x.group(), std::move(e));
}

GroupElement inverse(const GroupElement& x) { return power(x, -1); }

std::vector<GroupElement> enumerate(const CyclicFactorization& group) {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(group.group_order()));
    for (std::int64_t i = 0; i < group.group_order(); ++i)
        out.push_back(from_index(group, i));
    return out;
}

std::int64_t element_index(const GroupElement& x) {
    std::int64_t idx = 0;
    for (std::size_t l = 0; l < x.exps().size(); ++l)
        idx = idx * x.group().order(l) + x.exp(l);
    return idx;
}

GroupElement from_index(const CyclicFactorization& group, std::int64_t index) {
    if (index < 0 || index >= group.group_order())
        throw InvalidArgument("element index out of range");
    std::vector<std::int64_t> e(group.rank());
    for (std::size_t l = group.rank(); l-- > 0;) {
        e[l] = index % group.order(l);
        index /= group.order(l);
    }
    return GroupElement(group, std::move(e));
}

std::int64_t carry(std::int64_t i, std::int64_t j, std::int64_t m) {
    if (m < 2 || i < 0 || j < 0 || i >= m || j >= m)
        throw InvalidArgument("carry expects 0 <= i, j < m and m >= 2");
    return i + j >= m ? 1 : 0;
}

std::int64_t remainder(std::int64_t s, std::int64_t t) {
    if (t < 1)
        throw InvalidArgument("remainder expects a positive modulus");
    auto r = s % t;
    return r < 0 ? r + t : r;
}

std::int64_t floor_div(std::int64_t s, std::int64_t t) {
    return (s - remainder(s, t)) / t;
}

}  // namespace grcat
