#include "hjj/multilinear.hpp"

#include "hjj/errors.hpp"

#include <algorithm>

namespace hjj {

namespace {

void next_tuples(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out, bool sorted) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = sorted ? start : 0; i < n; ++i) {
        cur.push_back(i);
        next_tuples(n, k, i, cur, out, sorted);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<std::size_t>> sorted_tuples(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    next_tuples(n, k, 0, cur, out, true);
    return out;
}

Multilinear::Multilinear(std::size_t degree, std::size_t dim, std::size_t vdim)
    : degree_(degree), dim_(dim), vdim_(vdim) {
    std::size_t size = vdim;
    for (std::size_t i = 0; i < degree; ++i)
        size *= dim;
    data_.resize(size);
}

std::size_t Multilinear::offset(const std::vector<std::size_t>& args) const {
    if (args.size() != degree_)
        throw InvalidInput("wrong number of arguments for a degree-" + std::to_string(degree_) + " map");
    std::size_t o = 0;
    for (auto a : args) {
        if (a >= dim_)
            throw InvalidInput("basis index out of range");
        o = o * dim_ + a;
    }
    return o * vdim_;
}

Scalar& Multilinear::at(const std::vector<std::size_t>& args, std::size_t component) {
    return data_[offset(args) + component];
}

const Scalar& Multilinear::at(const std::vector<std::size_t>& args, std::size_t component) const {
    return data_[offset(args) + component];
}

Vector Multilinear::value(const std::vector<std::size_t>& args) const {
    std::size_t o = offset(args);
    return Vector(data_.begin() + o, data_.begin() + o + vdim_);
}

void Multilinear::set(const std::vector<std::size_t>& args, const Vector& v) {
    if (v.size() != vdim_)
        throw InvalidInput("value length differs from target dimension");
    std::size_t o = offset(args);
    std::copy(v.begin(), v.end(), data_.begin() + o);
}

void Multilinear::set_symmetric(const std::vector<std::size_t>& args, const Vector& v) {
    auto p = args;
    std::sort(p.begin(), p.end());
    do {
        set(p, v);
    } while (std::next_permutation(p.begin(), p.end()));
}

Vector Multilinear::eval(const std::vector<Vector>& xs) const {
    if (xs.size() != degree_)
        throw InvalidInput("wrong number of arguments for a degree-" + std::to_string(degree_) + " map");
    std::vector<std::vector<std::size_t>> support(degree_);
    for (std::size_t i = 0; i < degree_; ++i) {
        if (xs[i].size() != dim_)
            throw InvalidInput("argument length does not match the dimension");
        for (std::size_t j = 0; j < dim_; ++j)
            if (xs[i][j] != 0)
                support[i].push_back(j);
        if (support[i].empty())
            return Vector(vdim_);
    }
    Vector out(vdim_);
    std::vector<std::size_t> t(degree_);
    std::vector<Scalar> coeff(degree_ + 1);
    coeff[0] = 1;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == degree_) {
            std::size_t o = offset(t);
            for (std::size_t r = 0; r < vdim_; ++r)
                out[r] += coeff[i] * data_[o + r];
            return;
        }
        for (auto j : support[i]) {
            t[i] = j;
            coeff[i + 1] = coeff[i] * xs[i][j];
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

bool Multilinear::is_zero() const {
    return hjj::is_zero(data_);
}

bool Multilinear::is_symmetric() const {
    for (const auto& t : tuples()) {
        auto p = t;
        std::sort(p.begin(), p.end());
        if (value(p) != value(t))
            return false;
    }
    return true;
}

bool Multilinear::is_symmetric_in_first_two() const {
    if (degree_ < 2)
        return true;
    for (const auto& t : tuples()) {
        auto s = t;
        std::swap(s[0], s[1]);
        if (value(s) != value(t))
            return false;
    }
    return true;
}

std::vector<std::vector<std::size_t>> Multilinear::tuples() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    next_tuples(dim_, degree_, 0, cur, out, false);
    return out;
}

Multilinear& Multilinear::operator+=(const Multilinear& o) {
    if (o.degree_ != degree_ || o.dim_ != dim_ || o.vdim_ != vdim_)
        throw InvalidInput("adding multilinear maps of different shapes");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += o.data_[i];
    return *this;
}

Multilinear& Multilinear::operator-=(const Multilinear& o) {
    if (o.degree_ != degree_ || o.dim_ != dim_ || o.vdim_ != vdim_)
        throw InvalidInput("subtracting multilinear maps of different shapes");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= o.data_[i];
    return *this;
}

}  // namespace hjj
