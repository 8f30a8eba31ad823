#pragma once

// The eight automaton-validation cases: one accepting and one rejecting table
// per output restriction. Shared by the unit tests and the acceptance suite.

#include <string>
#include <vector>

namespace cases {

// Single-state table, lawful w.r.t. ports: prefers N, falls back to the first
// free port otherwise. The three action strings give "<leave> <carry_next>"
// for the observations (empty,0), (empty,1) and (full,0). `first` is an
// optional rule injected ahead of everything (first match wins).
inline std::string table(int p, const std::string& first, const std::string& e0,
                         const std::string& e1, const std::string& f0) {
  struct Row {
    const char* set;
    const char* port;
  };
  static constexpr Row rows[] = {{"E", "E"},  {"S", "S"},  {"W", "W"},   {"ES", "E"},
                                 {"EW", "E"}, {"SW", "S"}, {"ESW", "E"}, {"*", "N"}};
  std::string out = "p " + std::to_string(p) + "\nstart A\n" + first;
  for (auto [set, port] : rows) {
    out += std::string("A ") + set + " e 0 -> " + port + " " + e0 + " A\n";
    out += std::string("A ") + set + " e 1 -> " + port + " " + e1 + " A\n";
    out += std::string("A ") + set + " f 0 -> " + port + " " + f0 + " A\n";
  }
  return out;
}

struct ValidatorCase {
  const char* name;
  std::string text;
  bool ok;
  const char* message;  // expected violation for rejecting cases
};

inline std::vector<ValidatorCase> validator_cases() {
  return {
      {"accept-free-port", table(0, "", "e 0", "e 1", "f 0"), true, ""},
      {"reject-free-port", table(0, "A N e 0 -> E e 0 A\n", "e 0", "e 1", "f 0"), false,
       "port not free"},
      {"accept-keep-empty-handed", table(1, "", "e 0", "e 1", "f 0"), true, ""},
      {"reject-drop-empty-handed", table(1, "A N e 0 -> N f -1 A\n", "e 0", "e 1", "f 0"), false,
       "drop while carrying 0"},
      {"accept-drop-while-carrying", table(1, "", "e 0", "f 0", "f 0"), true, ""},
      {"reject-lose-while-carrying", table(1, "A N e 1 -> N e 0 A\n", "e 0", "e 1", "f 0"), false,
       "carried changed without drop"},
      {"accept-pick-from-full", table(1, "", "e 0", "e 1", "e 1"), true, ""},
      {"reject-pick-without-increment", table(1, "A N f 0 -> N e 0 A\n", "e 0", "e 1", "f 0"),
       false, "pick must increment carried"},
  };
}

}  // namespace cases
