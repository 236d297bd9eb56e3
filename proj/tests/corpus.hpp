#pragma once

// Word corpora shared by the unit and acceptance tests.

#include <set>
#include <string>
#include <vector>

#include "hatsplit/word_model.hpp"

namespace hatsplit::testing {

// Every word of length 1..max_len over the given letters, one per rotation class
// (classes are identified through parse_word's canonical rotation).
inline std::vector<std::string> words_up_to_rotation(const std::string& alphabet, int max_len) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  std::vector<std::string> layer{""};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    next.reserve(layer.size() * alphabet.size());
    for (const auto& w : layer) {
      for (char ch : alphabet) next.push_back(w + ch);
    }
    for (const auto& w : next) {
      // Canonical form includes the inferred rose, so "aa" and "bb" stay distinct words.
      if (seen.insert(parse_word(w).to_string()).second) out.push_back(w);
    }
    layer = std::move(next);
  }
  return out;
}

// Words over {a,A} and over {a,A,b,B}, length <= max_len, up to rotation.
inline std::vector<std::string> rose_corpus(int max_len) {
  auto one = words_up_to_rotation("aA", max_len);
  auto two = words_up_to_rotation("aAbB", max_len);
  std::set<std::string> have;
  std::vector<std::string> out;
  for (auto* v : {&one, &two}) {
    for (auto& w : *v) {
      if (have.insert(parse_word(w).to_string()).second) out.push_back(w);
    }
  }
  return out;
}

}  // namespace hatsplit::testing
