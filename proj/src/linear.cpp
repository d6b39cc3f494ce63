#include "ghkit/linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghkit {

namespace {

// w -= c * r
void axpy_sub(const Field& f, Word& w, Elem c, const Word& r) {
    for (size_t i = 0; i < w.size(); ++i) w[i] = f.sub(w[i], f.mul(c, r[i]));
}

} // namespace

Word LinearBasis::reduce(Word w) const {
    if ((int)w.size() != length) throw std::invalid_argument("vector length does not match basis");
    const Field& f = *field;
    for (size_t k = 0; k < rows.size(); ++k) {
        Elem c = w[pivots[k]];
        if (c != 0) axpy_sub(f, w, c, rows[k]);
    }
    return w;
}

bool LinearBasis::contains(const Word& w) const {
    Word r = reduce(w);
    return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

RrefBuilder::RrefBuilder(FieldPtr field, int length) : field_(std::move(field)), length_(length) {}

bool RrefBuilder::insert(Word w) {
    if ((int)w.size() != length_) throw std::invalid_argument("vector length does not match builder");
    const Field& f = *field_;
    for (size_t k = 0; k < rows_.size(); ++k) {
        Elem c = w[pivots_[k]];
        if (c != 0) axpy_sub(f, w, c, rows_[k]);
    }
    int piv = -1;
    for (int i = 0; i < length_; ++i)
        if (w[i] != 0) {
            piv = i;
            break;
        }
    if (piv < 0) return false;
    Elem c = f.inv(w[piv]);
    for (auto& x : w) x = f.mul(c, x);
    // eliminate the new pivot column from existing rows, then insert in pivot order
    for (size_t k = 0; k < rows_.size(); ++k) {
        Elem d = rows_[k][piv];
        if (d != 0) axpy_sub(f, rows_[k], d, w);
    }
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv);
    size_t idx = pos - pivots_.begin();
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + idx, std::move(w));
    return true;
}

LinearBasis RrefBuilder::take() {
    LinearBasis b;
    b.field = field_;
    b.length = length_;
    b.rows = std::move(rows_);
    b.pivots = std::move(pivots_);
    rows_.clear();
    pivots_.clear();
    return b;
}

int union_dim(const LinearBasis& a, const LinearBasis& b) {
    if (a.length != b.length || !a.field->same_as(*b.field))
        throw std::invalid_argument("bases live in different spaces");
    RrefBuilder rb(a.field, a.length);
    for (const auto& r : a.rows) rb.insert(r);
    for (const auto& r : b.rows) rb.insert(r);
    return rb.dim();
}

int intersection_dim(const LinearBasis& a, const LinearBasis& b) {
    return a.dim() + b.dim() - union_dim(a, b);
}

} // namespace ghkit
