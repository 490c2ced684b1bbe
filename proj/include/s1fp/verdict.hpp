#pragma once

#include <string>

namespace s1fp {

enum class Verdict { Pass, Fail, NotApplicable };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

struct CheckResult {
  Verdict verdict;
  std::string witness;  // exact value or counterexample description on fail
};

}  // namespace s1fp
