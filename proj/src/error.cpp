#include "icx/error.hpp"

namespace icx {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidDegree: return "invalid-degree";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::DegreeMismatch: return "degree-mismatch";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::NotSubgroup: return "not-subgroup";
    case ErrorKind::InvalidSystem: return "invalid-system";
    case ErrorKind::InvalidPoset: return "invalid-poset";
    case ErrorKind::InvalidSection: return "invalid-section";
    case ErrorKind::NotACGroup: return "not-a-cgroup";
    case ErrorKind::InvalidAction: return "invalid-action";
    case ErrorKind::InternalInconsistency: return "internal-inconsistency";
    case ErrorKind::UnsupportedType: return "unsupported-type";
    case ErrorKind::NotPolytopeSystem: return "not-polytope-system";
    case ErrorKind::NotPolytopeComplex: return "not-polytope-complex";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::IoError: return "io-error";
  }
  return "unknown-error";
}

} // namespace icx
