#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rankgray/cover.hpp"
#include "rankgray/verify.hpp"

namespace rankgray {

// File could not be opened or written (as opposed to parse errors,
// which throw std::invalid_argument).
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sequence file: "n=<n>" line, then the start permutation, then the
// generator indices separated by whitespace.
std::string format_sequence(const GenSequence& seq);
GenSequence parse_sequence(std::istream& in);
GenSequence load_sequence(const std::string& path);

// Cover file: "n=<n>" line, then one generator index per line, ordered
// by the rank of the even permutation it is assigned to.
std::string format_cover(const SuccessorCover& cover);
SuccessorCover parse_cover(std::istream& in);

// One visited permutation per line, in walk order.
std::string format_perms(const GenSequence& seq);

std::string report_text(const SnakeReport& rep);
std::string report_json(const SnakeReport& rep);

// Writes through a temp file in the same directory plus rename, so
// readers never observe a half-written file.
void write_atomic(const std::string& path, const std::string& data);

}  // namespace rankgray
