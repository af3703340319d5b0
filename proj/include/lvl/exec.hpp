#pragma once

namespace lvl {

/// Selects the OpenMP kernel or its serial reference. Both produce identical results.
enum class Exec { serial, parallel };

}  // namespace lvl
