#include "choquet/errors.hpp"

namespace choquet {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::dimension_mismatch: return "dimension mismatch";
    case Errc::invalid_ball: return "invalid ball";
    case Errc::dimension_bound: return "dimension bound exceeded";
    case Errc::not_on_sphere: return "not on the dual sphere";
    case Errc::not_in_ball: return "not in the dual ball";
    case Errc::not_probability: return "not a probability";
    case Errc::not_positive: return "not a positive measure";
    case Errc::hypothesis: return "hypothesis not met";
    case Errc::missing_pieces: return "missing function pieces";
    case Errc::malformed_input: return "malformed input";
    case Errc::unknown_suite: return "unknown suite";
    case Errc::lp_malformed: return "malformed linear program";
    case Errc::numeric_failure: return "numeric failure";
  }
  return "unknown error";
}

}  // namespace choquet
