#include "scox/io.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace scox {

namespace {

const char kAlias[5] = {'s', 't', 'u', 'v', 'w'};

bool has_default_labels(const System& sys) {
  for (int s = 0; s < sys.rank(); ++s)
    if (sys.label(s) != "s" + std::to_string(s + 1)) return false;
  return true;
}

bool use_aliases(const System& sys) {
  return sys.rank() <= 5 && has_default_labels(sys);
}

// Longest-label-first match of one generator name at position i, also
// accepting the alias letters when the system qualifies.  Returns the
// generator index and advances i, or returns -1 leaving i alone.
int match_generator(const System& sys, const std::string& text, size_t& i,
                    const std::vector<int>& by_length) {
  for (int s : by_length) {
    const std::string& lbl = sys.label(s);
    if (text.compare(i, lbl.size(), lbl) == 0) {
      i += lbl.size();
      return s;
    }
  }
  if (use_aliases(sys)) {
    for (int s = 0; s < sys.rank(); ++s)
      if (text[i] == kAlias[s]) {
        ++i;
        return s;
      }
  }
  return -1;
}

std::vector<int> labels_by_length(const System& sys) {
  std::vector<int> order(sys.rank());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return sys.label(a).size() > sys.label(b).size();
  });
  return order;
}

bool is_empty_alias(const System& sys, const std::string& text) {
  if (text.empty()) return true;
  for (const char* alias : {"0", "e", "∅"}) {
    if (text != alias) continue;
    if (sys.generator_by_label(text) >= 0) continue;  // a real label wins
    return true;
  }
  return false;
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::string genset_to_string(const System& sys, GenSet J) {
  if (J.empty()) return "0";
  std::string out;
  bool alias = use_aliases(sys);
  for (int s : J.elements()) out += alias ? std::string(1, kAlias[s]) : sys.label(s);
  return out;
}

GenSet genset_from_string(const System& sys, const std::string& raw) {
  std::string text = strip(raw);
  if (is_empty_alias(sys, text)) return GenSet();
  std::vector<int> by_length = labels_by_length(sys);
  GenSet J;
  size_t i = 0;
  while (i < text.size()) {
    int s = match_generator(sys, text, i, by_length);
    if (s < 0)
      throw std::invalid_argument("unknown generator in \"" + raw + "\" at position " +
                                  std::to_string(i));
    J = J.plus(s);
  }
  return J;
}

std::string word_to_string(const System& sys, const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string out;
  bool alias = use_aliases(sys);
  for (int s : word) out += alias ? std::string(1, kAlias[s]) : sys.label(s);
  return out;
}

std::vector<int> word_from_string(const System& sys, const std::string& raw) {
  std::string text = strip(raw);
  if (is_empty_alias(sys, text)) return {};
  std::vector<int> by_length = labels_by_length(sys);
  std::vector<int> word;
  size_t i = 0;
  while (i < text.size()) {
    int s = match_generator(sys, text, i, by_length);
    if (s < 0)
      throw std::invalid_argument("unknown generator in \"" + raw + "\" at position " +
                                  std::to_string(i));
    word.push_back(s);
  }
  return word;
}

std::string expression_to_text(const System& sys, const Expression& e) {
  std::string out = "[" + genset_to_string(sys, e.start) + "]";
  bool alias = use_aliases(sys);
  for (const Step& st : e.steps) {
    out += st.up ? " +" : " -";
    out += alias ? std::string(1, kAlias[st.gen]) : sys.label(st.gen);
  }
  return out;
}

std::string expression_brackets(const System& sys, const Expression& e) {
  std::string out = "[";
  bool first = true;
  for (GenSet I : e.subsets()) {
    if (!first) out += ",";
    out += genset_to_string(sys, I);
    first = false;
  }
  return out + "]";
}

Expression expression_from_text(const System& sys, const std::string& raw) {
  std::string text = strip(raw);
  if (text.empty() || text.front() != '[')
    throw std::invalid_argument("expression must open with a bracketed start set");
  size_t close = text.find(']');

  Expression e;
  if (close == std::string::npos) {
    // Bracket form spans the whole string.
    if (text.back() != ']')
      throw std::invalid_argument("unterminated bracket in \"" + raw + "\"");
    std::vector<GenSet> chain;
    std::string body = text.substr(1, text.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) chain.push_back(genset_from_string(sys, item));
    if (chain.empty() || (!body.empty() && body.back() == ','))
      throw std::invalid_argument("empty subset list in \"" + raw + "\"");
    return from_subsets(chain);
  }

  std::string head = text.substr(1, close - 1);
  if (head.find(',') != std::string::npos) {
    // Bracket form: "[st,s,su]".  Reparse the full body as a chain.
    if (text.back() != ']' || close + 1 != text.size())
      throw std::invalid_argument("trailing text after bracket form in \"" + raw + "\"");
    std::vector<GenSet> chain;
    std::stringstream ss(text.substr(1, text.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) chain.push_back(genset_from_string(sys, item));
    return from_subsets(chain);
  }

  // Step form: "[st] -s +u".
  e.start = genset_from_string(sys, head);
  std::vector<int> by_length = labels_by_length(sys);
  size_t i = close + 1;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    bool up;
    if (text[i] == '+')
      up = true;
    else if (text[i] == '-')
      up = false;
    else
      throw std::invalid_argument("expected +g or -g at position " + std::to_string(i) +
                                  " in \"" + raw + "\"");
    ++i;
    int s = match_generator(sys, text, i, by_length);
    if (s < 0)
      throw std::invalid_argument("unknown generator at position " + std::to_string(i) +
                                  " in \"" + raw + "\"");
    e.steps.push_back({up, s});
  }
  return e;
}

}  // namespace scox
