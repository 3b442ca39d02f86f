#pragma once

// Text forms of Weyl group elements and classes.
//
// Elements print as reduced words "s1 s2 s1", "e" for the identity, and "s"
// for the reflection of a rank-1 group. Classes print as sums of epsilon^w
// (or of [X_w] = epsilon^{w_o w}) ordered by length.

#include <string>
#include <string_view>

#include "schubert/richardson.hpp"

namespace schubert {

std::string format_word(const WeylElement& w);
std::string format_word(const WeylGroup& g, std::uint32_t index);

/// Accepts "e", "s" (rank 1), and letters s1..sN separated by spaces or
/// written together ("s1s2s1"). Any word is accepted; the result is its
/// product. Throws ParseError.
WeylElement parse_word(const WeylGroup& g, std::string_view text);

enum class ClassBasis {
    Epsilon, // epsilon^w
    X,       // [X_w] = epsilon^{w_o w}
};

/// "ε^e − ε^s", "2ε^{s1 s2} + ε^{s1 s2 s1}", "0".
std::string format_class(const CohomologyClass& a, ClassBasis basis = ClassBasis::Epsilon);

/// Sparse coefficients indexed by element, each term rendered as
/// prefix + word + suffix; with prefix "c_SM(X_" and suffix ")" this gives
/// "c_SM(X_{s1}) − c_SM(X_e)".
std::string format_combination(const WeylGroup& g, const SparseCoeffs& c, std::string_view prefix,
                               std::string_view suffix);

} // namespace schubert
