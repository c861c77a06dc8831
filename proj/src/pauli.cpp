#include "z2vqe/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "z2vqe/errors.hpp"

namespace z2vqe {

namespace {

int popcount(std::uint64_t v) { return std::popcount(v); }

void check_qubit_count(int n) {
    require(n >= 1 && n <= PauliString::max_qubits,
            "qubit count must be in [1, " + std::to_string(PauliString::max_qubits) + "]");
}

std::string format_coeff(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

PauliString PauliString::identity(int n_qubits) {
    check_qubit_count(n_qubits);
    return PauliString{n_qubits, 0, 0, 0};
}

PauliString PauliString::single(int n_qubits, int qubit, char op) {
    check_qubit_count(n_qubits);
    require(qubit >= 0 && qubit < n_qubits, "qubit index out of range");
    std::uint64_t bit = std::uint64_t{1} << qubit;
    PauliString p{n_qubits, 0, 0, 0};
    switch (op) {
        case 'X': p.x_mask = bit; break;
        case 'Y': p.x_mask = bit; p.z_mask = bit; break;
        case 'Z': p.z_mask = bit; break;
        default: throw std::invalid_argument("Pauli op must be one of X, Y, Z");
    }
    return p;
}

PauliString PauliString::from_ops(int n_qubits, const std::string& ops) {
    PauliString p = identity(n_qubits);
    std::istringstream in(ops);
    std::string tok;
    while (in >> tok) {
        if (tok == "I") continue;
        require(tok.size() >= 2, "bad Pauli factor: " + tok);
        char op = tok[0];
        int qubit = 0;
        try {
            qubit = std::stoi(tok.substr(1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad qubit index in factor: " + tok);
        }
        PauliString f = single(n_qubits, qubit, op);
        require((p.x_mask & f.x_mask) == 0 && (p.z_mask & f.z_mask) == 0 &&
                    (p.x_mask & f.z_mask) == 0 && (p.z_mask & f.x_mask) == 0,
                "duplicate qubit in factor list: " + tok);
        p.x_mask |= f.x_mask;
        p.z_mask |= f.z_mask;
    }
    return p;
}

std::complex<double> PauliString::phase() const {
    static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[phase_k & 3u];
}

int PauliString::weight() const { return popcount(x_mask | z_mask); }

char PauliString::op_at(int qubit) const {
    require(qubit >= 0 && qubit < n_qubits, "qubit index out of range");
    bool x = (x_mask >> qubit) & 1u;
    bool z = (z_mask >> qubit) & 1u;
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
}

PauliString PauliString::adjoint() const {
    PauliString p = *this;
    p.phase_k = static_cast<std::uint8_t>((4 - (phase_k & 3u)) & 3u);
    return p;
}

std::string PauliString::ops_text() const {
    if (is_identity()) return "I";
    std::string out;
    for (int q = 0; q < n_qubits; ++q) {
        char op = op_at(q);
        if (op == 'I') continue;
        if (!out.empty()) out += ' ';
        out += op;
        out += std::to_string(q);
    }
    return out;
}

PauliString mul(const PauliString& a, const PauliString& b) {
    require(a.n_qubits == b.n_qubits, "PauliString size mismatch in mul");
    PauliString c;
    c.n_qubits = a.n_qubits;
    c.x_mask = a.x_mask ^ b.x_mask;
    c.z_mask = a.z_mask ^ b.z_mask;
    // Count phases through the X^x Z^z normal form: each Y contributes one
    // factor of i when unfolded, Z-past-X reordering contributes (-1) per
    // overlap, and the result's Y factors fold one i each back out.
    int ya = popcount(a.x_mask & a.z_mask);
    int yb = popcount(b.x_mask & b.z_mask);
    int yc = popcount(c.x_mask & c.z_mask);
    int k = a.phase_k + b.phase_k + ya + yb + 2 * popcount(a.z_mask & b.x_mask) + 3 * yc;
    c.phase_k = static_cast<std::uint8_t>(k & 3);
    return c;
}

bool commutes(const PauliString& a, const PauliString& b) {
    require(a.n_qubits == b.n_qubits, "PauliString size mismatch in commutes");
    int overlap = popcount(a.x_mask & b.z_mask) + popcount(a.z_mask & b.x_mask);
    return (overlap & 1) == 0;
}

void PauliSum::add(std::complex<double> coeff, const PauliString& s) {
    if (n_qubits_ == 0) n_qubits_ = s.n_qubits;
    require(s.n_qubits == n_qubits_, "PauliSum term size mismatch");
    PauliTerm t;
    t.coeff = coeff * s.phase();
    t.string = s;
    t.string.phase_k = 0;
    terms_.push_back(t);
}

void PauliSum::add(const PauliSum& other) {
    if (other.empty()) return;
    if (n_qubits_ == 0) n_qubits_ = other.n_qubits_;
    require(other.n_qubits_ == n_qubits_, "PauliSum size mismatch");
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
}

void PauliSum::scale(std::complex<double> factor) {
    for (auto& t : terms_) t.coeff *= factor;
}

PauliSum PauliSum::adjoint() const {
    PauliSum out(n_qubits_);
    for (const auto& t : terms_) {
        // strings are stored phase-free, hence hermitian
        PauliTerm a{std::conj(t.coeff), t.string};
        out.terms_.push_back(a);
    }
    return out;
}

bool PauliSum::is_hermitian(double tol) const {
    PauliSum s = simplify(*this);
    for (const auto& t : s.terms())
        if (std::abs(t.coeff.imag()) > tol) return false;
    return true;
}

double PauliSum::sum_abs_coeffs() const {
    double acc = 0;
    for (const auto& t : terms_) acc += std::abs(t.coeff);
    return acc;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
    require(a.n_qubits_ == b.n_qubits_, "PauliSum size mismatch in product");
    PauliSum out(a.n_qubits_);
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) out.add(ta.coeff * tb.coeff, mul(ta.string, tb.string));
    return out;
}

PauliSum operator+(PauliSum a, const PauliSum& b) {
    a.add(b);
    return a;
}

PauliSum simplify(const PauliSum& s, double drop_tol) {
    require(drop_tol >= 0, "drop_tol must be >= 0");
    std::vector<PauliTerm> terms = s.terms();
    std::sort(terms.begin(), terms.end(), [](const PauliTerm& a, const PauliTerm& b) {
        if (a.string.z_mask != b.string.z_mask) return a.string.z_mask < b.string.z_mask;
        return a.string.x_mask < b.string.x_mask;
    });
    PauliSum out(s.n_qubits());
    std::size_t i = 0;
    while (i < terms.size()) {
        std::complex<double> coeff = terms[i].coeff;
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j].string.x_mask == terms[i].string.x_mask &&
               terms[j].string.z_mask == terms[i].string.z_mask) {
            coeff += terms[j].coeff;
            ++j;
        }
        if (std::abs(coeff) > drop_tol) out.add(coeff, terms[i].string);
        i = j;
    }
    return out;
}

std::string to_text(const PauliSum& s) {
    std::string out = "qubits " + std::to_string(s.n_qubits()) + "\n";
    for (const auto& t : s.terms()) {
        double scale = std::max(1.0, std::abs(t.coeff));
        if (std::abs(t.coeff.imag()) > 1e-10 * scale)
            throw std::logic_error("to_text requires real coefficients");
        out += format_coeff(t.coeff.real());
        out += " * ";
        out += t.string.ops_text();
        out += '\n';
    }
    return out;
}

PauliSum parse_pauli_sum(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n_qubits = -1;
    PauliSum out;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line);
        if (n_qubits < 0) {
            std::string kw;
            ls >> kw >> n_qubits;
            require(kw == "qubits" && n_qubits >= 1, "expected 'qubits N' header");
            out = PauliSum(n_qubits);
            continue;
        }
        std::string coeff_tok;
        ls >> coeff_tok;
        std::size_t pos = 0;
        double coeff = 0;
        try {
            coeff = std::stod(coeff_tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad coefficient: " + coeff_tok);
        }
        require(pos == coeff_tok.size(), "bad coefficient: " + coeff_tok);
        std::string star;
        std::string ops;
        if (ls >> star) {
            require(star == "*", "expected '*' after coefficient");
            std::getline(ls, ops);
        }
        out.add(coeff, PauliString::from_ops(n_qubits, ops));
    }
    require(n_qubits >= 1, "missing 'qubits N' header");
    return out;
}

}  // namespace z2vqe
