#pragma once

namespace equicolor {

// Debug-mode invariant checks (ledger prefix bookkeeping, exhaustive
// re-verification of postconditions). Off by default; enabled by the
// EQUICOLOR_DEBUG_ASSERT=1 environment variable or programmatically.
bool debug_asserts_enabled();
void set_debug_asserts(bool enabled);

}  // namespace equicolor
