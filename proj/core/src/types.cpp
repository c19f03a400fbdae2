#include "urt/types.hpp"

#include <cmath>

namespace urt {

bool is_learnable_link(LinkKind kind) {
  switch (kind) {
    case LinkKind::Entry:
    case LinkKind::Exit:
    case LinkKind::Vehicle:
    case LinkKind::Transfer:
      return true;
    case LinkKind::Board:
    case LinkKind::Alight:
      return false;
  }
  return false;
}

const char* to_string(Direction d) {
  switch (d) {
    case Direction::Up: return "up";
    case Direction::Down: return "down";
    case Direction::None: return "none";
  }
  return "none";
}

const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::GateMachine: return "gate";
    case NodeKind::Platform: return "platform";
    case NodeKind::TrainGate: return "train_gate";
  }
  return "gate";
}

const char* to_string(LinkKind k) {
  switch (k) {
    case LinkKind::Entry: return "entry";
    case LinkKind::Exit: return "exit";
    case LinkKind::Vehicle: return "vehicle";
    case LinkKind::Transfer: return "transfer";
    case LinkKind::Board: return "board";
    case LinkKind::Alight: return "alight";
  }
  return "entry";
}

std::optional<Direction> direction_from_string(const std::string& s) {
  if (s == "up") return Direction::Up;
  if (s == "down") return Direction::Down;
  if (s == "none") return Direction::None;
  return std::nullopt;
}

std::optional<NodeKind> node_kind_from_string(const std::string& s) {
  if (s == "gate") return NodeKind::GateMachine;
  if (s == "platform") return NodeKind::Platform;
  if (s == "train_gate") return NodeKind::TrainGate;
  return std::nullopt;
}

std::optional<LinkKind> link_kind_from_string(const std::string& s) {
  if (s == "entry") return LinkKind::Entry;
  if (s == "exit") return LinkKind::Exit;
  if (s == "vehicle") return LinkKind::Vehicle;
  if (s == "transfer") return LinkKind::Transfer;
  if (s == "board") return LinkKind::Board;
  if (s == "alight") return LinkKind::Alight;
  return std::nullopt;
}

std::optional<int> IntervalSpec::bin(double entry_time_min) const {
  if (entry_time_min < start_min) return std::nullopt;
  double offset = (entry_time_min - start_min) / width_min;
  int h = static_cast<int>(std::floor(offset));
  if (h >= count) return std::nullopt;
  return h;
}

}  // namespace urt
