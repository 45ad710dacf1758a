// Copyright 2026 The ctxdeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CTXDEG_PAULI_HPP
#define CTXDEG_PAULI_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctxdeg {

/// An N-qubit Pauli operator in binary symplectic form.
///
/// The operator is stored as the word
///
///     i^phase_exp * (X^x0 Z^z0) (x) (X^x1 Z^z1) (x) ... (x) (X^x{N-1} Z^z{N-1})
///
/// with the X exponents packed into `x_bits` and the Z exponents into
/// `z_bits`, one bit per qubit (bit i = leftmost-but-i tensor factor).
/// `phase_exp` is the power of the global factor i, reduced mod 4.
///
/// A tensor product of single-qubit Paulis built by `parse` carries
/// phase_exp = (#Y factors) mod 4, which is exactly the phase that makes the
/// word Hermitian and square to +identity (Y = i XZ per factor).
struct PauliOperator {
    static constexpr int kMaxQubits = 32;

    int num_qubits = 1;
    uint64_t x_bits = 0;
    uint64_t z_bits = 0;
    int phase_exp = 0;  // power of i, in {0,1,2,3}

    PauliOperator() = default;
    PauliOperator(int n, uint64_t x, uint64_t z, int phase)
        : num_qubits(n), x_bits(x), z_bits(z), phase_exp(((phase % 4) + 4) % 4) {
        if (n < 1 || n > kMaxQubits) {
            throw std::invalid_argument("qubit count out of range: " + std::to_string(n));
        }
        uint64_t mask = word_mask(n);
        if ((x & ~mask) || (z & ~mask)) {
            throw std::invalid_argument("x/z bits exceed qubit count");
        }
    }

    static uint64_t word_mask(int n) {
        return n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    }

    /// The identity word on n qubits (all bits zero, phase_exp zero).
    static PauliOperator identity(int n) {
        return PauliOperator(n, 0, 0, 0);
    }

    /// Parses a tensor-product label such as "XYI" into the Hermitian
    /// operator whose i-th factor matches label[i].
    ///
    /// Throws std::invalid_argument naming the first offending position if a
    /// character outside {I,X,Y,Z} appears, or if the label is empty or too
    /// long.
    static PauliOperator parse(const std::string &label) {
        if (label.empty()) {
            throw std::invalid_argument("empty Pauli label");
        }
        if (label.size() > kMaxQubits) {
            throw std::invalid_argument("Pauli label longer than " + std::to_string(kMaxQubits) +
                                        " qubits: " + label);
        }
        uint64_t x = 0;
        uint64_t z = 0;
        int ys = 0;
        for (size_t i = 0; i < label.size(); i++) {
            switch (label[i]) {
                case 'I':
                    break;
                case 'X':
                    x |= uint64_t{1} << i;
                    break;
                case 'Y':
                    x |= uint64_t{1} << i;
                    z |= uint64_t{1} << i;
                    ys++;
                    break;
                case 'Z':
                    z |= uint64_t{1} << i;
                    break;
                default:
                    throw std::invalid_argument("invalid Pauli character '" +
                                                std::string(1, label[i]) + "' at position " +
                                                std::to_string(i) + " in \"" + label + "\"");
            }
        }
        return PauliOperator(static_cast<int>(label.size()), x, z, ys % 4);
    }

    bool is_identity_word() const {
        return x_bits == 0 && z_bits == 0;
    }

    bool is_identity() const {
        return is_identity_word() && phase_exp == 0;
    }

    bool operator==(const PauliOperator &other) const = default;

    /// Product with phase tracking. Commuting each Z factor of `this` past an
    /// X factor of `other` on the same qubit contributes a factor -1 = i^2.
    PauliOperator operator*(const PauliOperator &other) const {
        if (num_qubits != other.num_qubits) {
            throw std::invalid_argument("Pauli product across different qubit counts");
        }
        int crossings = std::popcount(z_bits & other.x_bits);
        return PauliOperator(
            num_qubits,
            x_bits ^ other.x_bits,
            z_bits ^ other.z_bits,
            (phase_exp + other.phase_exp + 2 * crossings) % 4);
    }

    /// True iff the binary symplectic product <a.x,b.z> + <a.z,b.x> vanishes
    /// mod 2.
    bool commutes_with(const PauliOperator &other) const {
        if (num_qubits != other.num_qubits) {
            throw std::invalid_argument("commutation test across different qubit counts");
        }
        int s = std::popcount(x_bits & other.z_bits) + std::popcount(z_bits & other.x_bits);
        return (s & 1) == 0;
    }

    /// Conjugate transpose. Hermitian words (phase_exp == #Y mod 4) map to
    /// themselves.
    PauliOperator adjoint() const {
        int crossings = std::popcount(x_bits & z_bits);
        // (i^p X^x Z^z)^dag = (-i)^p Z^z X^x = i^{-p} (-1)^{x.z} X^x Z^z.
        return PauliOperator(num_qubits, x_bits, z_bits, ((-phase_exp + 2 * crossings) % 4 + 4) % 4);
    }

    /// The Hermitian operator with the same X/Z word (phase re-canonicalised
    /// to #Y mod 4).
    PauliOperator hermitian_word() const {
        return PauliOperator(num_qubits, x_bits, z_bits, std::popcount(x_bits & z_bits) % 4);
    }

    /// Tensor-product label, prefixed with the residual scalar when the
    /// stored phase differs from the Hermitian convention ("", "i*", "-",
    /// "-i*").
    std::string label() const {
        static const char *prefixes[4] = {"", "i*", "-", "-i*"};
        int hermitian_phase = std::popcount(x_bits & z_bits) % 4;
        int residual = ((phase_exp - hermitian_phase) % 4 + 4) % 4;
        std::string out = prefixes[residual];
        for (int i = 0; i < num_qubits; i++) {
            bool x = (x_bits >> i) & 1;
            bool z = (z_bits >> i) & 1;
            out += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
        }
        return out;
    }
};

/// Sign of a three-operator context, or "not a context".
enum class ContextSign {
    kPositive,      // product is +identity
    kNegative,      // product is -identity
    kNotAContext,   // operators do not pairwise commute or product is not +-identity
};

/// Classifies an operator triple per the context rule: all three must
/// pairwise commute and multiply to +-identity. Argument order does not
/// matter for commuting triples.
///
/// Preconditions: matching qubit counts, no identity argument.
inline ContextSign context_sign(const PauliOperator &a, const PauliOperator &b,
                                const PauliOperator &c) {
    if (a.num_qubits != b.num_qubits || a.num_qubits != c.num_qubits) {
        throw std::invalid_argument("context_sign across different qubit counts");
    }
    if (a.is_identity_word() || b.is_identity_word() || c.is_identity_word()) {
        throw std::invalid_argument("context_sign with an identity argument");
    }
    if (!a.commutes_with(b) || !a.commutes_with(c) || !b.commutes_with(c)) {
        return ContextSign::kNotAContext;
    }
    PauliOperator product = a * b * c;
    if (!product.is_identity_word()) {
        return ContextSign::kNotAContext;
    }
    switch (product.phase_exp) {
        case 0:
            return ContextSign::kPositive;
        case 2:
            return ContextSign::kNegative;
        default:
            return ContextSign::kNotAContext;
    }
}

/// All 4^n - 1 nontrivial Hermitian n-qubit operators in lexicographic label
/// order (I < X < Y < Z per position, leftmost factor most significant).
inline std::vector<PauliOperator> all_nontrivial_operators(int n) {
    if (n < 1 || n > 15) {
        throw std::invalid_argument("operator enumeration limited to 15 qubits");
    }
    static const char alphabet[4] = {'I', 'X', 'Y', 'Z'};
    uint64_t total = uint64_t{1} << (2 * n);
    std::vector<PauliOperator> ops;
    ops.reserve(total - 1);
    std::string label(static_cast<size_t>(n), 'I');
    for (uint64_t idx = 1; idx < total; idx++) {
        for (int q = 0; q < n; q++) {
            label[q] = alphabet[(idx >> (2 * (n - 1 - q))) & 3];
        }
        ops.push_back(PauliOperator::parse(label));
    }
    return ops;
}

}  // namespace ctxdeg

#endif
