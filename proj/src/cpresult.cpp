#include "cmlv/cpresult.hpp"

namespace cmlv {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ShaTrivialAtP:
      return "sha_trivial";
    case Verdict::ShaFiniteAtP:
      return "sha_finite";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace cmlv
