#pragma once

#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "urt/types.hpp"

namespace urt {

struct Station {
  StationId station_id = 0;
  std::string name;
  std::set<LineId> lines;

  bool is_transfer() const { return lines.size() >= 2; }
};

struct Node {
  NodeId node_id = 0;
  StationId station_id = 0;
  NodeKind kind = NodeKind::GateMachine;
  LineId line = kNoLine;                    // Platform and TrainGate only
  Direction direction = Direction::None;    // TrainGate only
};

struct Link {
  LinkId link_id = 0;
  NodeId tail = 0;
  NodeId head = 0;
  LinkKind kind = LinkKind::Entry;
  LineId line = kNoLine;
  Direction direction = Direction::None;
  std::optional<double> distance_m;
  double prior_time_min = 0.0;
};

struct WaitEvent {
  NodeId platform = 0;
  Direction direction = Direction::Up;

  bool operator==(const WaitEvent&) const = default;
};

/// A trip through the expanded graph: Entry link first, Exit link last,
/// simple node sequence. Wait events are the Board links in order, so
/// |wait_events| == 1 + number of Transfer links.
struct Path {
  int path_id = 0;
  StationId origin = 0;
  StationId destination = 0;
  std::vector<LinkId> links;
  std::vector<WaitEvent> wait_events;
  double prior_cost_min = 0.0;
};

/// Speeds and fallback priors used to turn distances into prior times.
struct SpeedConfig {
  double train_speed_m_per_min = 500.0;  // 30 km/h
  double walk_speed_m_per_min = 75.0;    // 4.5 km/h
  double default_walk_min = 1.0;         // Entry/Exit/Transfer without distance
  double default_vehicle_min = 3.0;      // Vehicle without distance
  double board_prior_min = 2.0;          // prior wait on Board links
};

/// Stations exploded into gate/platform/train-gate nodes with typed links.
/// Immutable after construction; safe to share across readers.
class ExpandedNetwork {
 public:
  const std::vector<Station>& stations() const { return stations_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Link>& links() const { return links_; }

  std::span<const LinkId> outgoing(NodeId n) const;
  std::span<const LinkId> incoming(NodeId n) const;

  const Station* find_station(StationId id) const;
  NodeId gate_node(StationId id) const;                       // -1 when absent
  NodeId platform_node(StationId id, LineId line) const;      // -1 when absent
  NodeId train_gate(StationId id, LineId line, Direction d) const;

  std::set<StationId> station_ids() const;

  /// prior_time_min per link, indexed by link_id; the default path weights.
  std::vector<double> prior_weights() const;

  friend class NetworkBuilder;

 private:
  std::vector<Station> stations_;
  std::vector<Node> nodes_;
  std::vector<Link> links_;
  std::vector<std::vector<LinkId>> out_;
  std::vector<std::vector<LinkId>> in_;
  std::map<StationId, size_t> station_index_;
  std::map<StationId, NodeId> gate_;
  std::map<std::pair<StationId, LineId>, NodeId> platform_;
  std::map<std::tuple<StationId, LineId, int>, NodeId> train_gate_;
};

/// Station expansion per the network representation rules: a general station
/// becomes 4 nodes (gate, platform, two train gates), a transfer station
/// with L lines becomes 1 + L + 2L nodes plus directed Transfer links
/// between every ordered platform pair.
struct ExpansionResult {
  std::vector<Node> nodes;
  std::vector<Link> links;
};
ExpansionResult expand_station(const Station& station, NodeId first_node_id,
                               LinkId first_link_id, const SpeedConfig& speeds = {});

/// Assembles an ExpandedNetwork from stations and line adjacency. Board and
/// Alight links are kept only for directions a train actually serves, so
/// terminal platforms get a single wait variable.
class NetworkBuilder {
 public:
  explicit NetworkBuilder(SpeedConfig speeds = {}) : speeds_(speeds) {}

  void add_station(StationId id, std::string name, std::set<LineId> lines);

  /// Vehicle link tail->head on `line` in `direction`; distance optional.
  void add_vehicle_link(StationId tail, StationId head, LineId line, Direction direction,
                        std::optional<double> distance_m);

  /// Walking distance for the Entry and Exit links of a station.
  void set_gate_distance(StationId station, double distance_m);

  /// Walking distance for the Transfer links between two lines' platforms
  /// (both directions).
  void set_transfer_distance(StationId station, LineId from_line, LineId to_line,
                             double distance_m);

  ExpandedNetwork build();

 private:
  SpeedConfig speeds_;
  std::map<StationId, Station> stations_;
  struct VehicleEdge {
    StationId tail, head;
    LineId line;
    Direction direction;
    std::optional<double> distance_m;
  };
  std::vector<VehicleEdge> vehicle_edges_;
  std::map<StationId, double> gate_distance_;
  std::map<std::tuple<StationId, LineId, LineId>, double> transfer_distance_;
};

/// One row of the Table-7-style link distance table.
struct LinkTableRow {
  StationId origin = 0;
  StationId destination = 0;
  int direction_code = 0;  // 0 up, 1 down, 2 transfer/entry/exit
  LineId line = 0;
  std::string origin_name;
  std::string destination_name;
  double distance_m = 0.0;
};

inline constexpr LineId kTransferLineCode = 100;
inline constexpr LineId kGateLineCode = 10000;
inline constexpr StationId kGateStationOffset = 10000;

/// Builds the expanded network from link-distance rows. Station numbers tied
/// together by transfer rows (e.g. 4 and 104 for the same physical station)
/// are merged onto the smallest number. Rows with line 10000 and an offset
/// origin number set a station's entry/exit walking distance.
ExpandedNetwork load_link_table(const std::vector<LinkTableRow>& rows,
                                const SpeedConfig& speeds = {});
ExpandedNetwork load_link_table_csv(std::istream& in, const SpeedConfig& speeds = {});
std::vector<LinkTableRow> parse_link_table_csv(std::istream& in);

std::string save_network_json(const ExpandedNetwork& net);
ExpandedNetwork load_network_json(const std::string& text);

struct NetworkDiagnostics {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Structural checks: orphan nodes, platforms without Board/Alight links,
/// duplicate (tail, head, kind, direction) links, vehicle connectivity per
/// line, dangling node references.
NetworkDiagnostics validate_network(const ExpandedNetwork& net);

struct PathSearchOptions {
  int k = 3;
  double detour_factor = 1.5;
};

struct PathSearchResult {
  std::vector<Path> paths;
  std::vector<std::string> warnings;
};

/// Up to k loopless trips between two stations, cheapest first, with
/// deterministic lexicographic tie-breaks. Unreachable destinations yield an
/// empty path list plus a warning record.
PathSearchResult k_shortest_paths(const ExpandedNetwork& net, StationId origin,
                                  StationId destination, const PathSearchOptions& options,
                                  std::span<const double> link_weights);
PathSearchResult k_shortest_paths(const ExpandedNetwork& net, StationId origin,
                                  StationId destination,
                                  const PathSearchOptions& options = {});

}  // namespace urt
