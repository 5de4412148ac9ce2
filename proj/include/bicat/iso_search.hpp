#pragma once

#include <optional>

namespace bicat {

// Result of an invertible-2-cell search. When `iso` is present it is a
// definite witness. When absent, `exhaustive` says whether the whole search
// space was enumerated (a proof of absence) or only a randomized sample was
// tried (a high-confidence report).
template <typename TwoCell>
struct IsoSearchOutcome {
  std::optional<TwoCell> iso;
  bool exhaustive = false;

  bool found() const { return iso.has_value(); }
};

}  // namespace bicat
