#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace z2vqe {

/// Tensor product of single-qubit Pauli operators with a global phase i^k.
///
/// Qubit q carries X iff bit q is set in x_mask only, Z iff set in z_mask
/// only, Y iff set in both, identity otherwise. The symplectic pair makes
/// products and commutators O(1) word operations and gives a canonical key
/// for hashing and ordering.
struct PauliString {
    int n_qubits = 0;
    std::uint64_t x_mask = 0;
    std::uint64_t z_mask = 0;
    std::uint8_t phase_k = 0;  // global phase i^phase_k, phase_k in {0,1,2,3}

    static constexpr int max_qubits = 64;

    static PauliString identity(int n_qubits);
    // op is one of 'X','Y','Z'.
    static PauliString single(int n_qubits, int qubit, char op);
    // factors like "X0 Z3 Y5"; "I" (or empty) for the identity.
    static PauliString from_ops(int n_qubits, const std::string& ops);

    std::complex<double> phase() const;
    bool is_identity() const { return x_mask == 0 && z_mask == 0; }
    // Hermitian iff the global phase is real once the implicit i per Y
    // factor is accounted for; with the W-convention used here that is
    // simply phase_k even.
    bool is_hermitian() const { return (phase_k & 1u) == 0; }
    int weight() const;
    char op_at(int qubit) const;  // 'I','X','Y','Z'
    PauliString adjoint() const;

    // Factor list without the phase, e.g. "X0 Z3"; "I" if identity.
    std::string ops_text() const;

    friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// Group product a*b with exact phase accumulation.
PauliString mul(const PauliString& a, const PauliString& b);

/// True iff [a, b] = 0 (even symplectic overlap).
bool commutes(const PauliString& a, const PauliString& b);

struct PauliTerm {
    std::complex<double> coeff;
    PauliString string;  // stored with phase_k == 0; phase folded into coeff
};

/// Linear combination of Pauli strings. Hermitian observables end up with
/// real coefficients; intermediate operator algebra (Jordan-Wigner factors)
/// may carry imaginary parts until conjugate pairs are summed.
class PauliSum {
public:
    PauliSum() = default;
    explicit PauliSum(int n_qubits) : n_qubits_(n_qubits) {}

    int n_qubits() const { return n_qubits_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    // Folds s.phase into the stored coefficient.
    void add(std::complex<double> coeff, const PauliString& s);
    void add(const PauliSum& other);
    void scale(std::complex<double> factor);

    PauliSum adjoint() const;
    bool is_hermitian(double tol = 1e-10) const;
    double sum_abs_coeffs() const;

    friend PauliSum operator*(const PauliSum& a, const PauliSum& b);
    friend PauliSum operator+(PauliSum a, const PauliSum& b);

    static constexpr double default_drop_tol = 1e-12;

private:
    int n_qubits_ = 0;
    std::vector<PauliTerm> terms_;
};

/// Merges duplicate strings, drops |coeff| <= drop_tol, sorts terms
/// lexicographically by (z_mask, x_mask) for reproducible output.
PauliSum simplify(const PauliSum& s, double drop_tol = PauliSum::default_drop_tol);

/// Textual form, one term per line, e.g. "-2 * Z0 X3 X4"; identity terms
/// print as "c * I". Starts with a "qubits N" header. Requires (near-)real
/// coefficients; intended for Hamiltonian dumps and diffing.
std::string to_text(const PauliSum& s);
PauliSum parse_pauli_sum(const std::string& text);

}  // namespace z2vqe
