#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "z2vqe/pauli.hpp"

namespace z2vqe {

/// Dense 2^n statevector, initialized to |0...0>.
struct StateVector {
    int n_qubits = 0;
    std::vector<std::complex<double>> amps;

    explicit StateVector(int n_qubits);
    std::size_t dim() const { return amps.size(); }
    double norm() const;
};

enum class GateKind { H, X, RX, RZ, PauliRot };

/// PauliRot applies exp(-i angle/2 * generator); RX/RZ are the single-qubit
/// specializations with implicit X/Z generators.
struct Gate {
    GateKind kind = GateKind::H;
    int target = -1;          // H, X, RX, RZ
    double angle = 0.0;       // RX, RZ, PauliRot
    PauliString generator;    // PauliRot

    static Gate h(int target);
    static Gate x(int target);
    static Gate rx(int target, double angle);
    static Gate rz(int target, double angle);
    static Gate pauli_rot(const PauliString& generator, double angle);

    // The rotation generator as a PauliString (RX/RZ included); throws for
    // non-rotation gates.
    PauliString rotation_generator(int n_qubits) const;
};

void apply(StateVector& psi, const Gate& g);
void apply_inverse(StateVector& psi, const Gate& g);
void apply(StateVector& psi, const std::vector<Gate>& gates);

/// out = P |in|; out must be distinct storage of the same size.
void apply_pauli(const PauliString& p, const std::vector<std::complex<double>>& in,
                 std::vector<std::complex<double>>& out);

/// out = sum_k c_k P_k |in>; parallelized over amplitude chunks.
void apply_pauli_sum(const PauliSum& h, const std::vector<std::complex<double>>& in,
                     std::vector<std::complex<double>>& out);

std::complex<double> inner(const StateVector& a, const StateVector& b);

/// <psi| P |psi> (complex in general; real for hermitian strings).
std::complex<double> expectation(const StateVector& psi, const PauliString& p);

/// <psi| H |psi> for a hermitian sum; asserts the imaginary residue is
/// below 1e-10 and discards it.
double expectation(const StateVector& psi, const PauliSum& h);

/// Shot-based estimator of <psi|H|psi>: partitions terms into qubit-wise
/// commuting groups (greedy first-fit), splits shots equally across groups
/// (remainder to the earliest), samples outcomes in each shared eigenbasis
/// from the exact distribution. Deterministic for a given seed.
double sample_expectation(const StateVector& psi, const PauliSum& h, long long shots,
                          std::uint64_t seed);

/// A Gauss-law charge sector: one hermitian string per site together with
/// the sign q_l * base_sign it must have on sector states.
struct SectorSpec {
    std::vector<PauliString> ops;
    std::vector<double> signs;

    bool empty() const { return ops.empty(); }
    std::size_t size() const { return ops.size(); }
};

/// Site-averaged projector expectation <(I + s_l G_l)/2>; equals 1 exactly
/// on the sector and decreases monotonically with violation.
double gauss_fidelity(const StateVector& psi, const SectorSpec& sector);

/// Raw site-averaged <s_l G_l> in [-1, 1]; fidelity = (1 + this) / 2.
double gauss_mean_expectation(const StateVector& psi, const SectorSpec& sector);

}  // namespace z2vqe
