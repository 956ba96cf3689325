#pragma once

#include <stdexcept>
#include <string>

namespace satseq {

enum class Errc {
  empty_input,
  invalid_character,
  parse_error,
  index_out_of_range,
  letter_out_of_alphabet,
  gap_out_of_range,
  alphabet_too_small,
  not_three_letters,
  shape_mismatch,
  precondition_failed,
  no_finite_p_padding,
  bad_parameters,
  grid_too_small,
  bound_exceeded,
  infeasible,
  resource_limit,
  engine_disagreement,
  internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::empty_input: return "EmptyInput";
    case Errc::invalid_character: return "InvalidCharacter";
    case Errc::parse_error: return "ParseError";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::letter_out_of_alphabet: return "LetterOutOfAlphabet";
    case Errc::gap_out_of_range: return "GapOutOfRange";
    case Errc::alphabet_too_small: return "AlphabetTooSmall";
    case Errc::not_three_letters: return "NotThreeLetters";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::precondition_failed: return "PreconditionFailed";
    case Errc::no_finite_p_padding: return "NoFinitePPadding";
    case Errc::bad_parameters: return "BadParameters";
    case Errc::grid_too_small: return "GridTooSmall";
    case Errc::bound_exceeded: return "BoundExceeded";
    case Errc::infeasible: return "Infeasible";
    case Errc::resource_limit: return "ResourceLimit";
    case Errc::engine_disagreement: return "EngineDisagreement";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* code_name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace satseq
