#include "gnarsil/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "gnarsil/errors.hpp"

namespace gnarsil {

bit_vector& bit_vector::operator^=(const bit_vector& other) {
    assert(nbits_ == other.nbits_);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] ^= other.words_[w];
    return *this;
}

bool bit_vector::any() const {
    for (std::uint64_t w : words_)
        if (w)
            return true;
    return false;
}

std::size_t bit_vector::popcount() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

int bit_vector::dot(const bit_vector& other) const {
    assert(nbits_ == other.nbits_);
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
        acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
}

std::size_t bit_vector::lowest_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w])
            return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return nbits_;
}

bit_vector bit_vector::slice(std::size_t start, std::size_t len) const {
    assert(start + len <= nbits_);
    bit_vector out(len);
    for (std::size_t i = 0; i < len; ++i)
        if (get(start + i))
            out.set(i, true);
    return out;
}

void bit_vector::xor_shifted(const bit_vector& other, std::size_t offset) {
    assert(offset + other.nbits_ <= nbits_);
    std::size_t word_shift = offset >> 6;
    std::size_t bit_shift = offset & 63;
    for (std::size_t w = 0; w < other.words_.size(); ++w) {
        std::uint64_t val = other.words_[w];
        if (!val)
            continue;
        words_[w + word_shift] ^= val << bit_shift;
        if (bit_shift && w + word_shift + 1 < words_.size())
            words_[w + word_shift + 1] ^= val >> (64 - bit_shift);
    }
}

void bit_matrix::add_row(bit_vector v) {
    assert(v.size() == cols);
    rows.push_back(std::move(v));
}

bit_matrix bit_matrix::from_strings(const std::vector<std::string>& strs) {
    bit_matrix m(strs.empty() ? 0 : strs.front().size());
    for (const std::string& s : strs)
        m.add_row(vector_from_string(s));
    return m;
}

bit_matrix bit_matrix::identity(std::size_t n) {
    bit_matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        bit_vector v(n);
        v.set(i, true);
        m.add_row(std::move(v));
    }
    return m;
}

std::string to_string(const bit_vector& v) {
    std::string s(v.size(), '0');
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i))
            s[i] = '1';
    return s;
}

bit_vector vector_from_string(const std::string& s) {
    bit_vector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw parse_error("bit string position " + std::to_string(i + 1) +
                              ": expected '0' or '1', got '" + s[i] + "'");
    }
    return v;
}

rref_result rref(const bit_matrix& m) {
    std::vector<bit_vector> r = m.rows;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols && lead < r.size(); ++c) {
        std::size_t sel = r.size();
        for (std::size_t i = lead; i < r.size(); ++i) {
            if (r[i].get(c)) {
                sel = i;
                break;
            }
        }
        if (sel == r.size())
            continue;
        std::swap(r[lead], r[sel]);
        for (std::size_t i = 0; i < r.size(); ++i)
            if (i != lead && r[i].get(c))
                r[i] ^= r[lead];
        pivots.push_back(c);
        ++lead;
    }
    r.resize(lead, bit_vector(m.cols));
    return {bit_matrix(m.cols, std::move(r)), std::move(pivots)};
}

std::size_t rank(const bit_matrix& m) { return rref(m).reduced.row_count(); }

bit_matrix kernel(const bit_matrix& m) {
    rref_result rr = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t p : rr.pivots)
        is_pivot[p] = true;
    bit_matrix basis(m.cols);
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f])
            continue;
        bit_vector v(m.cols);
        v.set(f, true);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            if (rr.reduced.row(i).get(f))
                v.set(rr.pivots[i], true);
        basis.add_row(std::move(v));
    }
    return basis;
}

std::optional<bit_vector> solve(const bit_matrix& sys,
                                const std::vector<std::uint8_t>& rhs) {
    assert(rhs.size() == sys.row_count());
    std::vector<bit_vector> a = sys.rows;
    std::vector<std::uint8_t> b = rhs;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < sys.cols && lead < a.size(); ++c) {
        std::size_t sel = a.size();
        for (std::size_t i = lead; i < a.size(); ++i) {
            if (a[i].get(c)) {
                sel = i;
                break;
            }
        }
        if (sel == a.size())
            continue;
        std::swap(a[lead], a[sel]);
        std::swap(b[lead], b[sel]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i != lead && a[i].get(c)) {
                a[i] ^= a[lead];
                b[i] ^= b[lead];
            }
        }
        pivots.push_back(c);
        ++lead;
    }
    for (std::size_t i = lead; i < a.size(); ++i)
        if (b[i])
            return std::nullopt;
    bit_vector x(sys.cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (b[i])
            x.set(pivots[i], true);
    return x;
}

bit_matrix kron(const bit_matrix& a, const bit_matrix& b) {
    bit_matrix out(a.cols * b.cols);
    for (const bit_vector& ra : a.rows) {
        for (const bit_vector& rb : b.rows) {
            bit_vector v(out.cols);
            for (std::size_t p = 0; p < a.cols; ++p)
                if (ra.get(p))
                    v.xor_shifted(rb, p * b.cols);
            out.add_row(std::move(v));
        }
    }
    return out;
}

bit_matrix transpose(const bit_matrix& m) {
    bit_matrix out(m.row_count());
    for (std::size_t c = 0; c < m.cols; ++c) {
        bit_vector v(m.row_count());
        for (std::size_t i = 0; i < m.row_count(); ++i)
            if (m.row(i).get(c))
                v.set(i, true);
        out.add_row(std::move(v));
    }
    return out;
}

bit_matrix mat_mul(const bit_matrix& a, const bit_matrix& b) {
    assert(a.cols == b.row_count());
    bit_matrix out(b.cols);
    for (const bit_vector& ra : a.rows) {
        bit_vector v(b.cols);
        for (std::size_t t = 0; t < a.cols; ++t)
            if (ra.get(t))
                v ^= b.row(t);
        out.add_row(std::move(v));
    }
    return out;
}

bool in_row_space(const bit_matrix& m, const bit_vector& v) {
    row_space rs(m.cols, m);
    return rs.contains(v);
}

row_space::row_space(std::size_t ncols, const bit_matrix& base) : ncols_(ncols) {
    for (const bit_vector& r : base.rows)
        add(r);
}

row_space::row_space(std::size_t ncols, const std::vector<bit_vector>& base)
    : ncols_(ncols) {
    for (const bit_vector& r : base)
        add(r);
}

bit_vector row_space::reduce(bit_vector v) const {
    for (const auto& [p, idx] : pivot_row_)
        if (v.get(p))
            v ^= rows_[idx];
    return v;
}

bool row_space::add(bit_vector v) {
    v = reduce(std::move(v));
    if (!v.any())
        return false;
    std::size_t p = v.lowest_set();
    rows_.push_back(std::move(v));
    pivot_row_[p] = rows_.size() - 1;
    const bit_vector& added = rows_.back();
    for (std::size_t i = 0; i + 1 < rows_.size(); ++i)
        if (rows_[i].get(p))
            rows_[i] ^= added;
    return true;
}

std::vector<std::size_t> first_combination(std::size_t w) {
    std::vector<std::size_t> c(w);
    for (std::size_t i = 0; i < w; ++i)
        c[i] = i;
    return c;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    if (c.empty())
        return false;
    std::size_t w = c.size();
    std::size_t i = w;
    while (i > 0) {
        --i;
        if (c[i] != i + n - w) {
            ++c[i];
            for (std::size_t j = i + 1; j < w; ++j)
                c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    /* Each partial value is itself a binomial coefficient and never
       shrinks as i grows, so the final value saturates as soon as any
       step does; 128-bit intermediates keep in-range values exact. */
    unsigned __int128 result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(result);
}

std::vector<std::size_t> combination_from_rank(std::size_t n, std::size_t w,
                                               std::uint64_t rank) {
    std::vector<std::size_t> c;
    c.reserve(w);
    std::size_t value = 0;
    for (std::size_t slot = w; slot > 0; --slot) {
        while (true) {
            std::uint64_t block = binomial(n - value - 1, slot - 1);
            if (rank < block) {
                c.push_back(value);
                ++value;
                break;
            }
            rank -= block;
            ++value;
        }
    }
    return c;
}

std::vector<bit_vector> enumerate_weight_w(std::size_t n, std::size_t w) {
    std::vector<bit_vector> out;
    if (w > n)
        return out;
    if (w == 0) {
        out.emplace_back(n);
        return out;
    }
    std::vector<std::size_t> c = first_combination(w);
    do {
        bit_vector v(n);
        for (std::size_t q : c)
            v.set(q, true);
        out.push_back(std::move(v));
    } while (next_combination(c, n));
    return out;
}

bit_matrix read_matrix_text(std::istream& in, const std::string& source_name) {
    std::size_t nrows = 0, ncols = 0;
    std::string header;
    if (!std::getline(in, header))
        throw parse_error(source_name + ": empty input, expected \"<rows> <cols>\" header");
    std::istringstream hs(header);
    if (!(hs >> nrows >> ncols))
        throw parse_error(source_name + " line 1: expected \"<rows> <cols>\" header");
    std::string trailing;
    if (hs >> trailing)
        throw parse_error(source_name + " line 1: unexpected token '" + trailing + "'");
    bit_matrix m(ncols);
    for (std::size_t i = 0; i < nrows; ++i) {
        std::string line;
        if (!std::getline(in, line))
            throw parse_error(source_name + " line " + std::to_string(i + 2) +
                              ": missing row " + std::to_string(i + 1));
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.size() != ncols)
            throw parse_error(source_name + " line " + std::to_string(i + 2) + ": row has " +
                              std::to_string(line.size()) + " characters, expected " +
                              std::to_string(ncols));
        try {
            m.add_row(vector_from_string(line));
        } catch (const parse_error& e) {
            throw parse_error(source_name + " line " + std::to_string(i + 2) + ": " + e.what());
        }
    }
    return m;
}

void write_matrix_text(std::ostream& out, const bit_matrix& m) {
    out << m.row_count() << " " << m.cols << "\n";
    for (const bit_vector& r : m.rows)
        out << to_string(r) << "\n";
}

bit_matrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error(path + ": cannot open file");
    return read_matrix_text(in, path);
}

} // namespace gnarsil
