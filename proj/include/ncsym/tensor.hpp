// Dense multi-index tensor fields over a coordinate chart.  Components are
// Expr (concrete fields) or LinExpr (ansatz fields); index 0 is always the
// time coordinate t, indices 1..d the spatial chart variables, matching the
// context variable order.
#pragma once

#include "ncsym/linsys.hpp"
#include <algorithm>
#include <vector>
#include <stdexcept>

namespace ncsym {

template <class T>
class TensorField {
public:
    TensorField() = default;
    TensorField(ContextPtr c, int dim, int n_up, int n_down)
        : ctx_(c), dim_(dim), n_up_(n_up), n_down_(n_down) {
        size_t n = 1;
        for (int k = 0; k < rank(); ++k) n *= dim;
        comp_.assign(n, make_zero(c));
    }

    int dim() const { return dim_; }
    int rank() const { return n_up_ + n_down_; }
    int n_up() const { return n_up_; }
    int n_down() const { return n_down_; }
    const ContextPtr& ctx() const { return ctx_; }

    T& at(const std::vector<int>& idx) { return comp_[flat(idx)]; }
    const T& at(const std::vector<int>& idx) const { return comp_[flat(idx)]; }
    T& at(std::initializer_list<int> idx) { return comp_[flat(std::vector<int>(idx))]; }
    const T& at(std::initializer_list<int> idx) const {
        return comp_[flat(std::vector<int>(idx))];
    }

    const std::vector<T>& components() const { return comp_; }
    std::vector<T>& components() { return comp_; }

    bool is_zero() const {
        for (const auto& c : comp_)
            if (!c.is_zero()) return false;
        return true;
    }

    TensorField operator+(const TensorField& o) const {
        TensorField r = *this;
        for (size_t k = 0; k < comp_.size(); ++k) r.comp_[k] = r.comp_[k] + o.comp_[k];
        return r;
    }
    TensorField operator-(const TensorField& o) const {
        TensorField r = *this;
        for (size_t k = 0; k < comp_.size(); ++k) r.comp_[k] = r.comp_[k] - o.comp_[k];
        return r;
    }
    TensorField operator-() const {
        TensorField r = *this;
        for (auto& c : r.comp_) c = -c;
        return r;
    }
    TensorField operator*(const Expr& e) const {
        TensorField r = *this;
        for (auto& c : r.comp_) c = c * e;
        return r;
    }

    // partial derivative, new covariant slot appended last
    TensorField diff_append() const {
        TensorField r(ctx_, dim_, n_up_, n_down_ + 1);
        std::vector<int> idx(rank());
        do {
            for (int c = 0; c < dim_; ++c) {
                std::vector<int> j = idx;
                j.push_back(c);
                r.at(j) = at(idx).diff(c);
            }
        } while (next_index(idx));
        return r;
    }

    // weight-one symmetrization over the given slots: T_(ab) = (T_ab+T_ba)/2
    TensorField symmetrized(const std::vector<int>& slots) const;
    TensorField antisymmetrized(const std::vector<int>& slots) const;
    bool symmetric_in(int s1, int s2) const;

    // iterate over all index tuples; returns false after the last one
    bool next_index(std::vector<int>& idx) const {
        for (int k = (int)idx.size() - 1; k >= 0; --k) {
            if (++idx[k] < dim_) return true;
            idx[k] = 0;
        }
        return false;
    }

private:
    ContextPtr ctx_;
    int dim_ = 0, n_up_ = 0, n_down_ = 0;
    std::vector<T> comp_;

    static T make_zero(const ContextPtr& c) {
        if constexpr (std::is_same_v<T, Expr>) return Expr(c);
        else return T(c);
    }

    size_t flat(const std::vector<int>& idx) const {
        if ((int)idx.size() != rank()) throw std::invalid_argument("TensorField: bad index count");
        size_t f = 0;
        for (int k : idx) {
            if (k < 0 || k >= dim_) throw std::out_of_range("TensorField: index out of range");
            f = f * dim_ + k;
        }
        return f;
    }
};

template <class T>
TensorField<T> TensorField<T>::symmetrized(const std::vector<int>& slots) const {
    std::vector<int> perm = slots;
    std::sort(perm.begin(), perm.end());
    TensorField r(ctx_, dim_, n_up_, n_down_);
    long fact = 1;
    for (size_t k = 2; k <= slots.size(); ++k) fact *= (long)k;
    Coeff w = Coeff(1) / Coeff(fact);
    std::vector<int> idx(rank(), 0);
    do {
        T acc = make_zero(ctx_);
        std::vector<int> p = perm;
        do {
            std::vector<int> j = idx;
            for (size_t k = 0; k < perm.size(); ++k) j[perm[k]] = idx[p[k]];
            acc = acc + at(j);
        } while (std::next_permutation(p.begin(), p.end()));
        r.at(idx) = acc.scaled(w);
    } while (next_index(idx));
    return r;
}

template <class T>
TensorField<T> TensorField<T>::antisymmetrized(const std::vector<int>& slots) const {
    std::vector<int> perm = slots;
    std::sort(perm.begin(), perm.end());
    TensorField r(ctx_, dim_, n_up_, n_down_);
    long fact = 1;
    for (size_t k = 2; k <= slots.size(); ++k) fact *= (long)k;
    Coeff w = Coeff(1) / Coeff(fact);
    std::vector<int> idx(rank(), 0);
    do {
        T acc = make_zero(ctx_);
        std::vector<int> p = perm;
        do {
            int inv = 0;
            for (size_t a = 0; a < p.size(); ++a)
                for (size_t b = a + 1; b < p.size(); ++b)
                    if (p[a] > p[b]) ++inv;
            std::vector<int> j = idx;
            for (size_t k = 0; k < perm.size(); ++k) j[perm[k]] = idx[p[k]];
            T v = at(j);
            acc = (inv % 2 == 0) ? acc + v : acc - v;
        } while (std::next_permutation(p.begin(), p.end()));
        r.at(idx) = acc.scaled(w);
    } while (next_index(idx));
    return r;
}

template <class T>
bool TensorField<T>::symmetric_in(int s1, int s2) const {
    std::vector<int> idx(rank(), 0);
    do {
        std::vector<int> j = idx;
        std::swap(j[s1], j[s2]);
        if (!(at(idx) - at(j)).is_zero()) return false;
    } while (next_index(idx));
    return true;
}

} // namespace ncsym
