#include "hamsim/pauli.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hamsim {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  throw std::logic_error("invalid Pauli value");
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw std::invalid_argument(std::string("invalid Pauli letter '") + c + "'");
  }
}

PauliString PauliString::from_string(const std::string& s) {
  std::vector<Pauli> factors;
  factors.reserve(s.size());
  for (char c : s) factors.push_back(pauli_from_char(c));
  return PauliString(std::move(factors));
}

bool PauliString::is_identity() const {
  for (Pauli p : factors_)
    if (p != Pauli::I) return false;
  return true;
}

uint32_t PauliString::weight() const {
  uint32_t w = 0;
  for (Pauli p : factors_)
    if (p != Pauli::I) ++w;
  return w;
}

std::string PauliString::to_string() const {
  std::string s;
  s.reserve(factors_.size());
  for (Pauli p : factors_) s.push_back(pauli_char(p));
  return s;
}

void PauliSum::add(double coeff, PauliString string) {
  if (string.width() != width_)
    throw std::invalid_argument("PauliSum::add: string width " + std::to_string(string.width()) +
                                " does not match sum width " + std::to_string(width_));
  if (coeff == 0.0) return;
  std::string key = string.to_string();
  auto it = index_.find(key);
  if (it == index_.end()) {
    terms_.push_back(PauliTerm{coeff, std::move(string)});
    index_.emplace(std::move(key), terms_.size() - 1);
    return;
  }
  PauliTerm& term = terms_[it->second];
  term.coeff += coeff;
  if (term.coeff == 0.0) {
    terms_.erase(terms_.begin() + static_cast<ptrdiff_t>(it->second));
    index_.clear();
    for (size_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i].string.to_string(), i);
  }
}

std::vector<PauliTerm> PauliSum::non_identity_terms() const {
  std::vector<PauliTerm> out;
  out.reserve(terms_.size());
  for (const PauliTerm& t : terms_)
    if (!t.string.is_identity()) out.push_back(t);
  return out;
}

bool commutes(const PauliString& a, const PauliString& b) {
  if (a.width() != b.width())
    throw std::invalid_argument("commutes: width mismatch (" + std::to_string(a.width()) + " vs " +
                                std::to_string(b.width()) + ")");
  uint32_t anticommuting = 0;
  for (uint32_t q = 0; q < a.width(); ++q) {
    Pauli pa = a.factor(q);
    Pauli pb = b.factor(q);
    if (pa != Pauli::I && pb != Pauli::I && pa != pb) ++anticommuting;
  }
  return anticommuting % 2 == 0;
}

bool all_terms_commute(const PauliSum& h) {
  const auto& terms = h.terms();
  for (size_t i = 0; i < terms.size(); ++i)
    for (size_t j = i + 1; j < terms.size(); ++j)
      if (!commutes(terms[i].string, terms[j].string)) return false;
  return true;
}

ParseError::ParseError(size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) tokens.push_back(tok);
  return tokens;
}

bool is_dense_token(const std::string& tok) {
  for (char c : tok)
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') return false;
  return !tok.empty();
}

bool is_sparse_token(const std::string& tok) {
  if (tok.size() < 2) return false;
  if (tok[0] != 'X' && tok[0] != 'Y' && tok[0] != 'Z') return false;
  for (size_t i = 1; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  return true;
}

double parse_coeff(const std::string& tok, size_t line_no) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);
  if (end != begin + tok.size())
    throw ParseError(line_no, "malformed coefficient '" + tok + "'");
  if (!std::isfinite(value))
    throw ParseError(line_no, "non-finite coefficient '" + tok + "'");
  return value;
}

}  // namespace

PauliSum parse_pauli_sum(std::istream& in) {
  std::string line;
  size_t line_no = 0;
  bool have_width = false;
  uint32_t width = 0;
  PauliSum sum;

  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = line;
    size_t first = trimmed.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;  // blank
    if (trimmed[first] == '#') continue;       // comment

    if (!have_width) {
      auto tokens = split_ws(trimmed);
      if (tokens.size() != 2 || tokens[0] != "qubits:")
        throw ParseError(line_no, "expected 'qubits: <N>' header");
      char* end = nullptr;
      long n = std::strtol(tokens[1].c_str(), &end, 10);
      if (end != tokens[1].c_str() + tokens[1].size() || n < 1)
        throw ParseError(line_no, "qubit count must be an integer >= 1");
      width = static_cast<uint32_t>(n);
      sum = PauliSum(width);
      have_width = true;
      continue;
    }

    auto tokens = split_ws(trimmed);
    if (tokens.size() < 2)
      throw ParseError(line_no, "expected '<coeff> <term>'");
    double coeff = parse_coeff(tokens[0], line_no);

    // Classify factor tokens. A lone IXYZ-only token is a dense string;
    // otherwise every token must be a sparse <letter><index> factor.
    std::vector<std::string> factors(tokens.begin() + 1, tokens.end());
    bool any_dense = false;
    bool any_sparse = false;
    for (const auto& tok : factors) {
      bool sparse = is_sparse_token(tok);
      bool dense = is_dense_token(tok);
      if (sparse)
        any_sparse = true;
      else if (dense)
        any_dense = true;
      else
        throw ParseError(line_no, "malformed term token '" + tok + "'");
    }
    if (any_dense && (any_sparse || factors.size() > 1))
      throw ParseError(line_no, "cannot mix dense and sparse factors on one line");

    PauliString string = PauliString::identity(width);
    if (any_dense) {
      const std::string& tok = factors[0];
      if (tok.size() != width)
        throw ParseError(line_no, "dense term length " + std::to_string(tok.size()) +
                                      " does not match declared width " + std::to_string(width));
      string = PauliString::from_string(tok);
    } else {
      std::vector<bool> seen(width, false);
      for (const auto& tok : factors) {
        Pauli p = pauli_from_char(tok[0]);
        char* end = nullptr;
        unsigned long q = std::strtoul(tok.c_str() + 1, &end, 10);
        if (q >= width)
          throw ParseError(line_no, "qubit index " + std::to_string(q) +
                                        " out of range for width " + std::to_string(width));
        if (seen[q])
          throw ParseError(line_no, "duplicate qubit index " + std::to_string(q));
        seen[q] = true;
        string.set_factor(static_cast<uint32_t>(q), p);
      }
    }
    sum.add(coeff, std::move(string));
  }

  if (!have_width) throw ParseError(line_no, "missing 'qubits: <N>' header");
  return sum;
}

PauliSum parse_pauli_sum(const std::string& text) {
  std::istringstream iss(text);
  return parse_pauli_sum(iss);
}

PauliSum parse_pauli_sum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open Hamiltonian file '" + path + "'");
  return parse_pauli_sum(in);
}

std::string to_text(const PauliSum& sum) {
  std::ostringstream out;
  out << "qubits: " << sum.width() << "\n";
  char buf[64];
  for (const PauliTerm& t : sum.terms()) {
    std::snprintf(buf, sizeof(buf), "%.17g", t.coeff);
    out << buf << " " << t.string.to_string() << "\n";
  }
  return out.str();
}

}  // namespace hamsim
