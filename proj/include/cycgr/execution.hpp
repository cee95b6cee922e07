#pragma once

namespace cycgr {

/// Selects between the serial reference kernel and its OpenMP counterpart.
/// Both produce identical results in identical order.
enum class Execution { serial, parallel };

}  // namespace cycgr
