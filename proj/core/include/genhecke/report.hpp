#ifndef GENHECKE_REPORT_HPP
#define GENHECKE_REPORT_HPP

#include <string>

#include "genhecke/enumerate.hpp"
#include "genhecke/presentation.hpp"

namespace genhecke {

/// JSON form of an enumeration result:
/// {schema, presentation, dimension, basis, matrices, specialization, seed,
///  max_len, total_words}. Timings never enter this payload, so identical
/// runs serialize identically.
std::string result_to_json(const EnumerationResult& r, const GeneratorSet& gens,
                           int indent = -1);

/// Inverse of result_to_json; the presentation supplies the alphabet, the
/// ring and the order relations.
EnumerationResult result_from_json(const std::string& text, const Presentation& p);

}  // namespace genhecke

#endif  // GENHECKE_REPORT_HPP
