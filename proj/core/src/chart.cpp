#include "tubegeo/chart.hpp"

#include "tubegeo/jets.hpp"

namespace tubegeo {

int ChartedManifold::add_chart(MetricFn metric, double switch_radius, double domain_radius) {
  charts_.push_back(Chart{std::move(metric), switch_radius, domain_radius});
  return static_cast<int>(charts_.size()) - 1;
}

void ChartedManifold::set_transition(int from, int to, MapFn map) {
  transitions_[{from, to}] = std::move(map);
}

bool ChartedManifold::in_domain(const ChartPoint& p) const {
  if (p.chart < 0 || p.chart >= num_charts()) return false;
  return p.x.norm() < chart(p.chart).domain_radius;
}

void ChartedManifold::require_in_domain(const ChartPoint& p) const {
  if (!in_domain(p))
    throw DomainError(label_ + ": point outside chart " + std::to_string(p.chart) + " domain");
}

bool ChartedManifold::has_transition(int from, int to) const {
  return transitions_.count({from, to}) > 0;
}

ChartPoint ChartedManifold::transfer_point(const ChartPoint& p, int to) const {
  if (to == p.chart) return p;
  auto it = transitions_.find({p.chart, to});
  if (it == transitions_.end())
    throw DomainError(label_ + ": no transition " + std::to_string(p.chart) + " -> " +
                      std::to_string(to));
  return ChartPoint{to, map_apply(it->second, p.x)};
}

Eigen::VectorXd ChartedManifold::transfer_vector(const ChartPoint& p, const Eigen::VectorXd& v,
                                                 int to) const {
  if (to == p.chart) return v;
  auto it = transitions_.find({p.chart, to});
  if (it == transitions_.end())
    throw DomainError(label_ + ": no transition " + std::to_string(p.chart) + " -> " +
                      std::to_string(to));
  return map_differential(it->second, p.x, v);
}

int ChartedManifold::preferred_chart(const ChartPoint& p) const {
  if (p.x.norm() <= chart(p.chart).switch_radius) return p.chart;
  int best = p.chart;
  double best_norm = p.x.norm();
  for (int c = 0; c < num_charts(); ++c) {
    if (c == p.chart || !has_transition(p.chart, c)) continue;
    ChartPoint q = transfer_point(p, c);
    if (q.x.norm() < best_norm) {
      best = c;
      best_norm = q.x.norm();
    }
  }
  return best;
}

void ChartedManifold::set_embeddings(std::vector<MapFn> per_chart,
                                     std::function<ChartPoint(const Eigen::VectorXd&)> unembed) {
  embeds_ = std::move(per_chart);
  unembed_ = std::move(unembed);
}

Eigen::VectorXd ChartedManifold::embed(const ChartPoint& p) const {
  return map_apply(embeds_.at(static_cast<std::size_t>(p.chart)), p.x);
}

Eigen::VectorXd ChartedManifold::embed_vector(const ChartPoint& p, const Eigen::VectorXd& v) const {
  return map_differential(embeds_.at(static_cast<std::size_t>(p.chart)), p.x, v);
}

ChartPoint ChartedManifold::unembed(const Eigen::VectorXd& y) const { return unembed_(y); }

void ChartedManifold::set_distance(std::function<double(const ChartPoint&, const ChartPoint&)> dist) {
  dist_ = std::move(dist);
}

}  // namespace tubegeo
