#pragma once

#include "kitt/bekoszul.hpp"
#include "kitt/kitt.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kittc {

/// Parsed problem document; polynomials already live in `ring`.
struct Problem {
  kitt::RingPtr ring;
  std::vector<kitt::Polynomial> i;
  std::optional<std::vector<kitt::Polynomial>> a;
  std::optional<kitt::PolyMatrix> phi;
  std::optional<kitt::PolyMatrix> matrix;
  std::optional<std::size_t> d;
};

/// Throws kitt::ParseError (document coordinates) or kitt::DomainError.
Problem parse_problem(const std::string& text);

/// "x*e1 - (y + 1)*e{2,3}" over F of the given rank; every term must have
/// the given degree. Basis symbols are e<k> and e{k,l,..}, 1-based.
kitt::ExtElement parse_ext(const std::string& text, const kitt::RingPtr& ring, std::size_t rank,
                           std::size_t degree);

/// Generators in order of decreasing polynomials (term by term, ring order).
std::vector<kitt::Polynomial> sorted_generators(std::vector<kitt::Polynomial> gens);

/// Runs `kittc` with argv-style arguments (without the program name).
/// Returns the exit code: 0 success, 1 error, 2 failed verification.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kittc
