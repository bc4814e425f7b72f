#include "grcat/tensor_cochain.hpp"

#include "grcat/cocycle.hpp"
#include "grcat/errors.hpp"

#include <numeric>

namespace grcat {

int TensorGenerator::degree() const { return std::accumulate(a.begin(), a.end(), 0); }

std::string TensorGenerator::to_string() const {
    std::string s = "Phi(";
    for (std::size_t l = 0; l < a.size(); ++l)
        s += (l ? "," : "") + std::to_string(a[l]);
    return s + ")";
}

TensorGenerator phi(std::size_t n, std::initializer_list<std::size_t> positions) {
    TensorGenerator g{std::vector<int>(n, 0)};
    for (auto p : positions) {
        if (p >= n)
            throw InvalidArgument("Phi index out of range");
        ++g.a[p];
    }
    return g;
}

TensorCochain3::TensorCochain3(const CyclicFactorization& group)
    : group_(group), diag_(group.rank()), iij_(index_pairs(group.rank()).size()),
      ijj_(iij_.size()), rst_(index_triples(group.rank()).size()) {}

std::size_t TensorCochain3::pair_slot(std::size_t i, std::size_t j) const {
    return pair_position(group_.rank(), i, j);
}

std::size_t TensorCochain3::triple_slot(std::size_t r, std::size_t s, std::size_t t) const {
    return triple_position(group_.rank(), r, s, t);
}

const UnityScalar& TensorCochain3::iij(std::size_t i, std::size_t j) const { return iij_[pair_slot(i, j)]; }
const UnityScalar& TensorCochain3::ijj(std::size_t i, std::size_t j) const { return ijj_[pair_slot(i, j)]; }
const UnityScalar& TensorCochain3::rst(std::size_t r, std::size_t s, std::size_t t) const {
    return rst_[triple_slot(r, s, t)];
}
UnityScalar& TensorCochain3::iij(std::size_t i, std::size_t j) { return iij_[pair_slot(i, j)]; }
UnityScalar& TensorCochain3::ijj(std::size_t i, std::size_t j) { return ijj_[pair_slot(i, j)]; }
UnityScalar& TensorCochain3::rst(std::size_t r, std::size_t s, std::size_t t) {
    return rst_[triple_slot(r, s, t)];
}

const UnityScalar& TensorCochain3::on(const TensorGenerator& g) const {
    if (g.a.size() != group_.rank() || g.degree() != 3)
        throw InvalidArgument("3-cochain evaluated on " + g.to_string());
    std::vector<std::size_t> pos;
    for (std::size_t l = 0; l < g.a.size(); ++l)
        for (int k = 0; k < g.a[l]; ++k)
            pos.push_back(l);
    if (pos[0] == pos[2])
        return lll(pos[0]);
    if (pos[0] == pos[1])
        return iij(pos[0], pos[2]);
    if (pos[1] == pos[2])
        return ijj(pos[0], pos[1]);
    return rst(pos[0], pos[1], pos[2]);
}

TensorCochain3 operator*(const TensorCochain3& a, const TensorCochain3& b) {
    if (!(a.group_ == b.group_))
        throw InvalidArgument("cannot multiply cochains over different groups");
    TensorCochain3 c = a;
    auto mul = [](std::vector<UnityScalar>& x, const std::vector<UnityScalar>& y) {
        for (std::size_t k = 0; k < x.size(); ++k)
            x[k] *= y[k];
    };
    mul(c.diag_, b.diag_);
    mul(c.iij_, b.iij_);
    mul(c.ijj_, b.ijj_);
    mul(c.rst_, b.rst_);
    return c;
}

TensorCochain3 TensorCochain3::inv() const {
    TensorCochain3 c = *this;
    for (auto* v : {&c.diag_, &c.iij_, &c.ijj_, &c.rst_})
        for (auto& x : *v)
            x = x.inv();
    return c;
}

}  // namespace grcat
