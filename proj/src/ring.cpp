#include "gnarsil/ring.hpp"

#include <bit>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gnarsil/errors.hpp"

namespace gnarsil {

namespace {

void check_same_ring(const ring_matrix& a, const ring_matrix& b,
                     const char* what) {
    if (a.modulus != b.modulus)
        throw std::invalid_argument(std::string(what) +
                                    ": circulant sizes differ (" +
                                    std::to_string(a.modulus) + " vs " +
                                    std::to_string(b.modulus) + ")");
}

} // namespace

ring_poly ring_mul(ring_poly a, ring_poly b, std::size_t modulus) {
    std::uint64_t mask = (std::uint64_t{1} << modulus) - 1;
    ring_poly r = 0;
    while (a) {
        unsigned j = static_cast<unsigned>(std::countr_zero(a));
        a &= a - 1;
        if (j == 0)
            r ^= b;
        else
            r ^= ((b << j) | (b >> (modulus - j))) & mask;
    }
    return r;
}

ring_poly ring_conj(ring_poly a, std::size_t modulus) {
    ring_poly r = a & 1;
    for (std::size_t j = 1; j < modulus; ++j)
        if ((a >> j) & 1)
            r |= ring_poly{1} << (modulus - j);
    return r;
}

ring_matrix ring_matrix::identity(std::size_t c, std::size_t modulus) {
    ring_matrix m(c, c, modulus);
    for (std::size_t i = 0; i < c; ++i)
        m.at(i, i) = 1;
    return m;
}

bool is_zero(const ring_matrix& m) {
    for (ring_poly e : m.entries)
        if (e)
            return false;
    return true;
}

ring_matrix conjugate_entries(const ring_matrix& m) {
    ring_matrix out(m.rows, m.cols, m.modulus);
    for (std::size_t i = 0; i < m.entries.size(); ++i)
        out.entries[i] = ring_conj(m.entries[i], m.modulus);
    return out;
}

ring_matrix ring_transpose(const ring_matrix& m) {
    ring_matrix out(m.cols, m.rows, m.modulus);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            out.at(j, i) = m.at(i, j);
    return out;
}

ring_matrix conjugate_transpose(const ring_matrix& m) {
    return ring_transpose(conjugate_entries(m));
}

ring_matrix ring_mat_mul(const ring_matrix& a, const ring_matrix& b) {
    check_same_ring(a, b, "ring matrix product");
    if (a.cols != b.rows)
        throw std::invalid_argument("ring matrix product: inner dimensions " +
                                    std::to_string(a.cols) + " and " +
                                    std::to_string(b.rows) + " differ");
    ring_matrix out(a.rows, b.cols, a.modulus);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t t = 0; t < a.cols; ++t) {
            ring_poly av = a.at(i, t);
            if (!av)
                continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                out.at(i, j) ^= ring_mul(av, b.at(t, j), a.modulus);
        }
    return out;
}

ring_matrix ring_kron(const ring_matrix& a, const ring_matrix& b) {
    check_same_ring(a, b, "ring Kronecker product");
    ring_matrix out(a.rows * b.rows, a.cols * b.cols, a.modulus);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < b.rows; ++j)
            for (std::size_t p = 0; p < a.cols; ++p)
                for (std::size_t q = 0; q < b.cols; ++q)
                    out.at(i * b.rows + j, p * b.cols + q) =
                        ring_mul(a.at(i, p), b.at(j, q), a.modulus);
    return out;
}

bit_matrix lift(const ring_matrix& m) {
    std::size_t l = m.modulus;
    bit_matrix out(m.cols * l);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t s = 0; s < l; ++s) {
            bit_vector v(m.cols * l);
            for (std::size_t q = 0; q < m.cols; ++q) {
                ring_poly a = m.at(i, q);
                while (a) {
                    std::size_t j =
                        static_cast<std::size_t>(std::countr_zero(a));
                    a &= a - 1;
                    v.set(q * l + (s + j) % l, true);
                }
            }
            out.add_row(std::move(v));
        }
    }
    return out;
}

ring_poly parse_ring_entry(const std::string& token, std::size_t modulus,
                           const std::string& context) {
    if (token.empty())
        throw parse_error(context + ": empty ring entry");
    if (token == "0")
        return 0;
    ring_poly out = 0;
    std::size_t pos = 0;
    while (pos < token.size()) {
        std::size_t plus = token.find('+', pos);
        std::string term = token.substr(
            pos, plus == std::string::npos ? std::string::npos : plus - pos);
        if (term.empty())
            throw parse_error(context + ": empty term in ring entry \"" +
                              token + "\"");
        std::size_t exponent;
        if (term == "1") {
            exponent = 0;
        } else if (term == "x") {
            exponent = 1;
        } else if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
            std::size_t value = 0;
            for (std::size_t i = 2; i < term.size(); ++i) {
                char ch = term[i];
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw parse_error(context + ": bad exponent in term \"" +
                                      term + "\"");
                value = value * 10 + static_cast<std::size_t>(ch - '0');
                if (value > 1u << 20)
                    throw parse_error(context + ": exponent out of range in \"" +
                                      term + "\"");
            }
            exponent = value % modulus;
        } else {
            throw parse_error(context + ": bad ring term \"" + term +
                              "\" (expected 0, 1, x, or x^j)");
        }
        out ^= ring_poly{1} << (exponent % modulus);
        if (plus == std::string::npos)
            break;
        pos = plus + 1;
        if (pos == token.size())
            throw parse_error(context + ": trailing '+' in ring entry \"" +
                              token + "\"");
    }
    return out;
}

std::string format_ring_entry(ring_poly p) {
    if (!p)
        return "0";
    std::string out;
    for (std::size_t j = 0; j < 64; ++j) {
        if (!((p >> j) & 1))
            continue;
        if (!out.empty())
            out += '+';
        if (j == 0)
            out += '1';
        else if (j == 1)
            out += 'x';
        else
            out += "x^" + std::to_string(j);
    }
    return out;
}

namespace {

struct ring_header {
    std::size_t rows, cols, modulus;
};

ring_header read_ring_header(std::istream& in, const std::string& source_name) {
    std::string line;
    if (!std::getline(in, line))
        throw parse_error(source_name +
                          ": empty input, expected \"<rows> <cols> <L>\" header");
    std::istringstream hs(line);
    long long rows = -1, cols = -1, modulus = -1;
    if (!(hs >> rows >> cols >> modulus) || rows < 0 || cols < 0)
        throw parse_error(source_name +
                          ": malformed header, expected \"<rows> <cols> <L>\"");
    std::string extra;
    if (hs >> extra)
        throw parse_error(source_name + ": trailing token \"" + extra +
                          "\" after header");
    if (modulus < 1 || modulus > 63)
        throw parse_error(source_name +
                          ": circulant size must be between 1 and 63, got " +
                          std::to_string(modulus));
    return {static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
            static_cast<std::size_t>(modulus)};
}

} // namespace

ring_matrix read_ring_matrix_text(std::istream& in,
                                  const std::string& source_name) {
    ring_header h = read_ring_header(in, source_name);
    ring_matrix m(h.rows, h.cols, h.modulus);
    for (std::size_t i = 0; i < h.rows; ++i) {
        for (std::size_t j = 0; j < h.cols; ++j) {
            std::string token;
            if (!(in >> token))
                throw parse_error(source_name + ": missing entry (" +
                                  std::to_string(i + 1) + ", " +
                                  std::to_string(j + 1) + ")");
            m.at(i, j) = parse_ring_entry(
                token, h.modulus,
                source_name + " entry (" + std::to_string(i + 1) + ", " +
                    std::to_string(j + 1) + ")");
        }
    }
    std::string extra;
    if (in >> extra)
        throw parse_error(source_name + ": trailing token \"" + extra +
                          "\" after the last entry");
    return m;
}

void write_ring_matrix_text(std::ostream& out, const ring_matrix& m) {
    out << m.rows << ' ' << m.cols << ' ' << m.modulus << '\n';
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (j)
                out << ' ';
            out << format_ring_entry(m.at(i, j));
        }
        out << '\n';
    }
}

ring_matrix read_qc_exponents(std::istream& in, const std::string& source_name) {
    ring_header h = read_ring_header(in, source_name);
    ring_matrix m(h.rows, h.cols, h.modulus);
    for (std::size_t i = 0; i < h.rows; ++i) {
        for (std::size_t j = 0; j < h.cols; ++j) {
            long long e;
            if (!(in >> e))
                throw parse_error(source_name + ": missing exponent (" +
                                  std::to_string(i + 1) + ", " +
                                  std::to_string(j + 1) + ")");
            if (e < -1 || e >= static_cast<long long>(h.modulus))
                throw parse_error(source_name + ": exponent " +
                                  std::to_string(e) + " at (" +
                                  std::to_string(i + 1) + ", " +
                                  std::to_string(j + 1) +
                                  ") outside [-1, L-1]");
            m.at(i, j) = e < 0 ? 0 : ring_poly{1} << e;
        }
    }
    std::string extra;
    if (in >> extra)
        throw parse_error(source_name + ": trailing token \"" + extra +
                          "\" after the last entry");
    return m;
}

ring_matrix load_ring_matrix_file(const std::string& path, bool qc_exponents) {
    std::ifstream in(path);
    if (!in)
        throw parse_error(path + ": cannot open file");
    return qc_exponents ? read_qc_exponents(in, path)
                        : read_ring_matrix_text(in, path);
}

} // namespace gnarsil
