#pragma once

// Text rendering and parsing for generator sets and expressions.  These are
// the formats the command line tools speak, so they are pinned: changing a
// byte here is a compatibility break.

#include <string>

#include "scox/coxeter.h"
#include "scox/expression.h"

namespace scox {

// "st", "s1s3", "0" for the empty set.  When the system uses the default
// s1..sn labels and has rank at most five, the single letters s,t,u,v,w are
// used instead, which keeps low-rank output readable.
std::string genset_to_string(const System& sys, GenSet J);

// Inverse of the above.  Also accepts "", "e" and the unicode empty-set sign
// for the empty set (unless a generator is actually labelled that way), and
// always accepts both the alias letters and the real labels.
GenSet genset_from_string(const System& sys, const std::string& text);

// A word in the generators, rendered with the same letter scheme as
// genset_to_string; the empty word is "e".
std::string word_to_string(const System& sys, const std::vector<int>& word);

// Inverse of word_to_string.  Unlike a generator set, a word keeps order and
// repetitions, so "sts" is three letters long.
std::vector<int> word_from_string(const System& sys, const std::string& text);

// Step form: "[st] -s +u -s +t".  A width-zero expression is just "[st]".
std::string expression_to_text(const System& sys, const Expression& e);

// Bracket form: "[st,s,su,s,st]" lists every subset the expression visits.
std::string expression_brackets(const System& sys, const Expression& e);

// Parses either of the two forms above, deciding by shape.
Expression expression_from_text(const System& sys, const std::string& text);

}  // namespace scox
