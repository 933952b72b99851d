#include "gnarsil/pauli.hpp"

#include <cctype>

#include "gnarsil/errors.hpp"

namespace gnarsil {

bit_vector x_half(const bit_vector& p) {
    std::size_t n = qubit_count(p);
    return p.slice(0, n);
}

bit_vector z_half(const bit_vector& p) {
    std::size_t n = qubit_count(p);
    return p.slice(n, n);
}

bit_vector swap_halves(const bit_vector& p) {
    std::size_t n = qubit_count(p);
    bit_vector out(2 * n);
    out.xor_shifted(p.slice(n, n), 0);
    out.xor_shifted(p.slice(0, n), n);
    return out;
}

bit_vector make_pauli(const bit_vector& a, const bit_vector& b) {
    bit_vector out(a.size() + b.size());
    out.xor_shifted(a, 0);
    out.xor_shifted(b, a.size());
    return out;
}

bit_vector pure_x(const bit_vector& a) {
    bit_vector out(2 * a.size());
    out.xor_shifted(a, 0);
    return out;
}

bit_vector pure_z(const bit_vector& b) {
    bit_vector out(2 * b.size());
    out.xor_shifted(b, b.size());
    return out;
}

bool is_x_type(const bit_vector& p) { return !z_half(p).any(); }

bool is_z_type(const bit_vector& p) { return !x_half(p).any(); }

int symplectic_product(const bit_vector& u, const bit_vector& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("symplectic_product: operator lengths differ");
    if (u.size() % 2 != 0)
        throw std::invalid_argument("symplectic_product: operator length is odd");
    return u.dot(swap_halves(v));
}

bool commutes(const bit_vector& u, const bit_vector& v) {
    return symplectic_product(u, v) == 0;
}

std::size_t pauli_weight(const bit_vector& p) {
    std::size_t n = qubit_count(p);
    std::size_t w = 0;
    for (std::size_t q = 0; q < n; ++q)
        if (p.get(q) || p.get(n + q))
            ++w;
    return w;
}

bit_vector parse_pauli(const std::string& s, std::size_t n) {
    bit_vector p(2 * n);
    if (s == "I")
        return p;
    if (s.empty())
        throw parse_error("empty pauli string (use \"I\" for the identity)");
    std::size_t i = 0;
    while (i < s.size()) {
        char letter = s[i];
        if (letter != 'X' && letter != 'Y' && letter != 'Z')
            throw parse_error("pauli string position " + std::to_string(i + 1) +
                              ": expected 'X', 'Y' or 'Z', got '" + letter + "'");
        std::size_t digits_start = ++i;
        std::size_t index = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            index = index * 10 + static_cast<std::size_t>(s[i] - '0');
            if (index > n)
                index = n + 1; // saturate; any further digits stay out of range
            ++i;
        }
        if (i == digits_start)
            throw parse_error("pauli string position " + std::to_string(i + 1) +
                              ": expected a qubit index after '" + letter + "'");
        if (index < 1 || index > n)
            throw parse_error("pauli string position " + std::to_string(digits_start + 1) +
                              ": qubit index out of range 1.." + std::to_string(n));
        std::size_t q = index - 1;
        if (letter == 'X' || letter == 'Y')
            p.flip(q);
        if (letter == 'Z' || letter == 'Y')
            p.flip(n + q);
    }
    return p;
}

std::string print_pauli(const bit_vector& p) {
    std::size_t n = qubit_count(p);
    std::string out;
    for (std::size_t q = 0; q < n; ++q) {
        bool xa = p.get(q);
        bool zb = p.get(n + q);
        if (!xa && !zb)
            continue;
        out += (xa && zb) ? 'Y' : (xa ? 'X' : 'Z');
        out += std::to_string(q + 1);
    }
    return out.empty() ? "I" : out;
}

} // namespace gnarsil
