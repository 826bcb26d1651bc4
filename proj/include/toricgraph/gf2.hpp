// gf2.hpp -- dense bit-packed linear algebra over GF(2).
//
// BitVec and BitMat store {0,1} entries packed into 64-bit words. All
// public indices are 1-based. Addition is bitwise XOR throughout.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricgraph {

class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    static BitVec from_bits(const std::vector<int> &bits) {
        BitVec v(bits.size());
        for (std::size_t k = 0; k < bits.size(); ++k) {
            if (bits[k] != 0 && bits[k] != 1)
                throw std::invalid_argument("BitVec entries must be 0 or 1");
            if (bits[k]) v.set(k + 1, true);
        }
        return v;
    }

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const {
        check_index(i);
        return (words_[(i - 1) / 64] >> ((i - 1) % 64)) & 1u;
    }

    void set(std::size_t i, bool b) {
        check_index(i);
        const std::uint64_t mask = std::uint64_t(1) << ((i - 1) % 64);
        if (b)
            words_[(i - 1) / 64] |= mask;
        else
            words_[(i - 1) / 64] &= ~mask;
    }

    void flip(std::size_t i) { set(i, !get(i)); }

    BitVec &operator^=(const BitVec &o) {
        if (o.len_ != len_) throw std::invalid_argument("BitVec size mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec &b) { return a ^= b; }

    bool operator==(const BitVec &o) const {
        return len_ == o.len_ && words_ == o.words_;
    }
    bool operator!=(const BitVec &o) const { return !(*this == o); }

    std::size_t weight() const {
        std::size_t w = 0;
        for (auto word : words_) w += static_cast<std::size_t>(__builtin_popcountll(word));
        return w;
    }

    bool is_zero() const {
        for (auto word : words_)
            if (word) return false;
        return true;
    }

    // True when the two vectors share any set bit.
    bool intersects(const BitVec &o) const {
        if (o.len_ != len_) throw std::invalid_argument("BitVec size mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    // Parity of the AND of two vectors (mod-2 inner product).
    bool dot(const BitVec &o) const {
        if (o.len_ != len_) throw std::invalid_argument("BitVec size mismatch");
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
        return __builtin_parityll(acc);
    }

    std::string to_string() const {
        std::string s;
        s.reserve(len_);
        for (std::size_t i = 1; i <= len_; ++i) s.push_back(get(i) ? '1' : '0');
        return s;
    }

  private:
    void check_index(std::size_t i) const {
        if (i < 1 || i > len_) throw std::out_of_range("BitVec index out of range");
    }

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;

    friend class BitMat;
};

class BitMat {
  public:
    BitMat() = default;
    BitMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

    static BitMat identity(std::size_t n) {
        BitMat m(n, n);
        for (std::size_t i = 1; i <= n; ++i) m.set(i, i, true);
        return m;
    }

    static BitMat from_rows(const std::vector<std::vector<int>> &rows) {
        if (rows.empty()) return BitMat();
        BitMat m(rows.size(), rows[0].size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != rows[0].size())
                throw std::invalid_argument("ragged row list");
            m.data_[r] = BitVec::from_bits(rows[r]);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return row(r).get(c); }
    void set(std::size_t r, std::size_t c, bool b) {
        check_row(r);
        data_[r - 1].set(c, b);
    }

    const BitVec &row(std::size_t r) const {
        check_row(r);
        return data_[r - 1];
    }

    BitVec col(std::size_t c) const {
        BitVec v(rows_);
        for (std::size_t r = 1; r <= rows_; ++r) v.set(r, get(r, c));
        return v;
    }

    void xor_row(std::size_t dst, std::size_t src) {
        check_row(dst);
        check_row(src);
        data_[dst - 1] ^= data_[src - 1];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        check_row(a);
        check_row(b);
        std::swap(data_[a - 1], data_[b - 1]);
    }

    bool operator==(const BitMat &o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const BitMat &o) const { return !(*this == o); }

    friend BitMat operator^(BitMat a, const BitMat &b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("BitMat shape mismatch");
        for (std::size_t r = 0; r < a.rows_; ++r) a.data_[r] ^= b.data_[r];
        return a;
    }

    BitMat transpose() const {
        BitMat t(cols_, rows_);
        for (std::size_t r = 1; r <= rows_; ++r)
            for (std::size_t c = 1; c <= cols_; ++c)
                if (get(r, c)) t.set(c, r, true);
        return t;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t r = 1; r <= rows_; ++r) {
            s += row(r).to_string();
            s.push_back('\n');
        }
        return s;
    }

  private:
    void check_row(std::size_t r) const {
        if (r < 1 || r > rows_) throw std::out_of_range("BitMat row out of range");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVec> data_;
};

// Mod-2 matrix product. Row r of the result is the XOR of the rows of b
// selected by the 1-entries in row r of a.
inline BitMat gf2_matmul(const BitMat &a, const BitMat &b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("gf2_matmul: inner dimension mismatch");
    BitMat out(a.rows(), b.cols());
    for (std::size_t r = 1; r <= a.rows(); ++r) {
        BitVec acc(b.cols());
        for (std::size_t k = 1; k <= a.cols(); ++k)
            if (a.get(r, k)) acc ^= b.row(k);
        for (std::size_t c = 1; c <= b.cols(); ++c)
            if (acc.get(c)) out.set(r, c, true);
    }
    return out;
}

inline BitVec gf2_matvec(const BitMat &a, const BitVec &v) {
    if (a.cols() != v.size()) throw std::invalid_argument("gf2_matvec: dimension mismatch");
    BitVec out(a.rows());
    for (std::size_t r = 1; r <= a.rows(); ++r) out.set(r, a.row(r).dot(v));
    return out;
}

inline std::size_t gf2_rank(BitMat m) {
    std::size_t rank = 0;
    for (std::size_t c = 1; c <= m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = 0;
        for (std::size_t r = rank + 1; r <= m.rows(); ++r)
            if (m.get(r, c)) {
                pivot = r;
                break;
            }
        if (!pivot) continue;
        m.swap_rows(pivot, rank + 1);
        for (std::size_t r = 1; r <= m.rows(); ++r)
            if (r != rank + 1 && m.get(r, c)) m.xor_row(r, rank + 1);
        ++rank;
    }
    return rank;
}

inline std::optional<BitMat> gf2_try_invert(const BitMat &m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("gf2_invert: matrix not square");
    const std::size_t n = m.rows();
    BitMat work = m;
    BitMat inv = BitMat::identity(n);
    for (std::size_t c = 1; c <= n; ++c) {
        std::size_t pivot = 0;
        for (std::size_t r = c; r <= n; ++r)
            if (work.get(r, c)) {
                pivot = r;
                break;
            }
        if (!pivot) return std::nullopt;
        work.swap_rows(pivot, c);
        inv.swap_rows(pivot, c);
        for (std::size_t r = 1; r <= n; ++r)
            if (r != c && work.get(r, c)) {
                work.xor_row(r, c);
                inv.xor_row(r, c);
            }
    }
    return inv;
}

inline BitMat gf2_invert(const BitMat &m) {
    auto inv = gf2_try_invert(m);
    if (!inv) throw std::domain_error("gf2_invert: matrix is singular");
    return *inv;
}

inline bool gf2_invertible(const BitMat &m) {
    return m.rows() == m.cols() && gf2_try_invert(m).has_value();
}

}  // namespace toricgraph
