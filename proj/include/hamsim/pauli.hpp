#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hamsim {

enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// A phase-free tensor product of single-qubit Pauli operators, one factor
/// per qubit. Signs produced by algebra are returned separately where needed.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<Pauli> factors) : factors_(std::move(factors)) {}

  static PauliString identity(uint32_t width) {
    return PauliString(std::vector<Pauli>(width, Pauli::I));
  }
  /// Parse a dense string over {I,X,Y,Z}, e.g. "XIZ".
  static PauliString from_string(const std::string& s);

  uint32_t width() const { return static_cast<uint32_t>(factors_.size()); }
  Pauli factor(uint32_t q) const { return factors_.at(q); }
  void set_factor(uint32_t q, Pauli p) { factors_.at(q) = p; }

  bool is_identity() const;
  /// Number of non-identity factors.
  uint32_t weight() const;

  std::string to_string() const;

  bool operator==(const PauliString& other) const { return factors_ == other.factors_; }
  bool operator!=(const PauliString& other) const { return !(*this == other); }

 private:
  std::vector<Pauli> factors_;
};

struct PauliTerm {
  double coeff = 0.0;
  PauliString string;
};

/// A real-weighted sum of Pauli strings over a fixed qubit count. Terms keep
/// their insertion order; adding a string that is already present merges
/// coefficients, and exact-zero terms are dropped.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(uint32_t width) : width_(width) {}

  uint32_t width() const { return width_; }
  size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  const PauliTerm& term(size_t i) const { return terms_.at(i); }

  void add(double coeff, PauliString string);

  /// Terms excluding the all-identity string (which only contributes a
  /// global phase under exponentiation).
  std::vector<PauliTerm> non_identity_terms() const;

 private:
  uint32_t width_ = 0;
  std::vector<PauliTerm> terms_;
  std::unordered_map<std::string, size_t> index_;
};

/// True iff the strings commute: the count of positions where both factors
/// are non-identity and different must be even.
bool commutes(const PauliString& a, const PauliString& b);

bool all_terms_commute(const PauliSum& h);

class ParseError : public std::runtime_error {
 public:
  ParseError(size_t line, const std::string& what);
  size_t line() const { return line_; }

 private:
  size_t line_;
};

/// Parse the line-oriented Hamiltonian text format:
///
///   # optional comments
///   qubits: <N>
///   <coeff> <dense string over IXYZ, length N>
///   <coeff> <sparse factors like "X0 Z2"; unlisted qubits are I>
///
/// Duplicate strings are merged by coefficient summation and exact zeros
/// dropped. Mixing dense and sparse factors on one line is an error.
PauliSum parse_pauli_sum(std::istream& in);
PauliSum parse_pauli_sum(const std::string& text);
PauliSum parse_pauli_sum_file(const std::string& path);

/// Serialize in the same text format (dense strings); a parse fixed point.
std::string to_text(const PauliSum& sum);

}  // namespace hamsim
