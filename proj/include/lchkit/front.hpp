#pragma once

#include <string>
#include <vector>

namespace lchkit {

enum class EventKind { LeftCusp, RightCusp, Crossing };

struct FrontEvent {
  EventKind kind;
  int position;  // 1-based, counted from the bottom strand

  bool operator==(const FrontEvent&) const = default;
};

struct Invariants {
  int tb;
  int rot;
};

// A closed front given by x-ordered Morse events. Construction validates and traces components.
class FrontDiagram {
 public:
  FrontDiagram() = default;
  explicit FrontDiagram(std::vector<FrontEvent> events, std::vector<bool> reversed = {});

  const std::vector<FrontEvent>& events() const { return events_; }
  int component_count() const { return component_count_; }
  const std::vector<bool>& reversed() const { return reversed_; }

  // Strands present just after `slot` events (slot 0 and slot size() are empty).
  int strand_count(int slot) const { return static_cast<int>(component_[slot].size()); }
  // Component id and direction (+1 east, -1 west) of the strand at 1-based `pos` in `slot`.
  int component_at(int slot, int pos) const { return component_[slot][pos - 1]; }
  int direction_at(int slot, int pos) const { return direction_[slot][pos - 1]; }

  int crossing_count() const;
  bool is_plat() const;

  FrontDiagram with_orientation(std::vector<bool> reversed) const;

 private:
  std::vector<FrontEvent> events_;
  std::vector<bool> reversed_;
  int component_count_ = 0;
  std::vector<std::vector<int>> component_;
  std::vector<std::vector<int>> direction_;
};

FrontDiagram parse_front(const std::string& text);
std::string serialize_front(const FrontDiagram& front);
std::string event_token(const FrontEvent& e);

FrontDiagram platify(const FrontDiagram& front);

std::vector<Invariants> classical_invariants(const FrontDiagram& front);

// Linking number of two distinct components (half the signed count of their mutual crossings).
int linking_number(const FrontDiagram& front, int a, int b);

}  // namespace lchkit
