#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace urt {

inline constexpr const char* kToolVersion = "0.1.0";

using StationId = int;
using NodeId = int;
using LinkId = int;
using LineId = int;

inline constexpr LineId kNoLine = -1;

enum class Direction : uint8_t { Up = 0, Down = 1, None = 2 };

enum class NodeKind : uint8_t { GateMachine = 0, Platform = 1, TrainGate = 2 };

enum class LinkKind : uint8_t {
  Entry = 0,
  Exit = 1,
  Vehicle = 2,
  Transfer = 3,
  Board = 4,
  Alight = 5,
};

/// Link kinds whose travel time is a learnable variable. Board links carry
/// waiting-time variables instead; Alight links are fixed at zero.
bool is_learnable_link(LinkKind kind);

const char* to_string(Direction d);
const char* to_string(NodeKind k);
const char* to_string(LinkKind k);

std::optional<Direction> direction_from_string(const std::string& s);
std::optional<NodeKind> node_kind_from_string(const std::string& s);
std::optional<LinkKind> link_kind_from_string(const std::string& s);

/// Contiguous half-open entry-time intervals [start + i*width, start + (i+1)*width).
struct IntervalSpec {
  double start_min = 420.0;  // 7:00
  double width_min = 30.0;
  int count = 10;

  /// Interval index for an entry time, or nullopt when outside the window.
  std::optional<int> bin(double entry_time_min) const;
  double begin(int h) const { return start_min + h * width_min; }
  double end(int h) const { return start_min + (h + 1) * width_min; }

  bool operator==(const IntervalSpec&) const = default;
};

}  // namespace urt
