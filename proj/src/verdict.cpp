#include "ctrlab/verdict.hpp"

namespace ctrlab {

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Gorenstein:
      return "Gorenstein";
    case VerdictKind::CtrNotGorenstein:
      return "CtrNotGorenstein";
    case VerdictKind::NotCtr:
      return "NotCtr";
    case VerdictKind::InconclusiveAtBound:
      break;
  }
  return "InconclusiveAtBound";
}

std::optional<VerdictKind> verdict_kind_from_string(std::string_view name) {
  for (auto k : {VerdictKind::Gorenstein, VerdictKind::CtrNotGorenstein, VerdictKind::NotCtr,
                 VerdictKind::InconclusiveAtBound}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

}  // namespace ctrlab
