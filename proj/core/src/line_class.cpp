#include "cl3/line_class.hpp"

namespace cl3 {

LineClass::LineClass(const Geometry& g)
    : geom_(&g), bits_((static_cast<std::size_t>(g.n_lines()) + 63) / 64, 0) {}

LineClass::LineClass(const Geometry& g, const std::vector<Id>& members) : LineClass(g) {
  for (Id l : members) set(l, true);
}

void LineClass::set(Id line, bool member) {
  if (line < 0 || line >= geom_->n_lines()) fail(Errc::UnknownLine, "line id out of range");
  std::uint64_t& word = bits_[static_cast<std::size_t>(line) >> 6];
  const std::uint64_t mask = std::uint64_t{1} << (line & 63);
  if (member && !(word & mask)) {
    word |= mask;
    ++size_;
  } else if (!member && (word & mask)) {
    word &= ~mask;
    --size_;
  }
}

LineClass LineClass::complement() const {
  LineClass out(*geom_);
  for (std::size_t w = 0; w < bits_.size(); ++w) out.bits_[w] = ~bits_[w];
  // Clear padding past the last line so equality stays bitwise.
  const int tail = geom_->n_lines() & 63;
  if (tail) out.bits_.back() &= (std::uint64_t{1} << tail) - 1;
  out.size_ = geom_->n_lines() - size_;
  return out;
}

std::vector<Id> LineClass::member_ids() const {
  std::vector<Id> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (Id l = 0; l < geom_->n_lines(); ++l)
    if (contains(l)) out.push_back(l);
  return out;
}

bool LineClass::operator==(const LineClass& other) const {
  if (geom_ != other.geom_ && !geom_->field().same_as(other.geom_->field())) return false;
  return bits_ == other.bits_;
}

std::vector<int> plane_counts(const LineClass& L) {
  const Geometry& g = L.geometry();
  std::vector<int> counts(g.n_planes(), 0);
  for (Id l = 0; l < g.n_lines(); ++l) {
    if (!L.contains(l)) continue;
    for (Id pl : g.line_planes(l)) ++counts[pl];
  }
  return counts;
}

std::vector<int> point_counts(const LineClass& L) {
  const Geometry& g = L.geometry();
  std::vector<int> counts(g.n_points(), 0);
  for (Id l = 0; l < g.n_lines(); ++l) {
    if (!L.contains(l)) continue;
    for (Id p : g.line_points(l)) ++counts[p];
  }
  return counts;
}

namespace {
std::map<int, long long> histogram(const std::vector<int>& counts) {
  std::map<int, long long> h;
  for (int c : counts) ++h[c];
  return h;
}
}  // namespace

std::map<int, long long> plane_spectrum(const LineClass& L) { return histogram(plane_counts(L)); }

std::map<int, long long> point_spectrum(const LineClass& L) { return histogram(point_counts(L)); }

LineClass apply_to_class(const LineClass& L, const Collineation& c) {
  const Geometry& g = L.geometry();
  LineClass out(g);
  for (Id l = 0; l < g.n_lines(); ++l)
    if (L.contains(l)) out.set(apply_to_line(g, c, l), true);
  return out;
}

}  // namespace cl3
