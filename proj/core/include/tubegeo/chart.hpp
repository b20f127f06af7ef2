#pragma once

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tubegeo/errors.hpp"
#include "tubegeo/functor.hpp"

namespace tubegeo {

struct ChartPoint {
  int chart = 0;
  Eigen::VectorXd x;
};

// A Riemannian manifold presented by one or more coordinate charts with a
// smooth metric on each and transition maps between overlapping ones.
// Immutable after construction; all queries are const and thread-safe.
class ChartedManifold {
 public:
  struct Chart {
    MetricFn metric;
    double switch_radius;  // samplers and integrators prefer another chart beyond this
    double domain_radius;  // hard validity bound; DomainError outside
  };

  ChartedManifold(std::string label, int dim) : label_(std::move(label)), dim_(dim) {}

  const std::string& label() const { return label_; }
  int dim() const { return dim_; }
  int num_charts() const { return static_cast<int>(charts_.size()); }
  const Chart& chart(int c) const { return charts_.at(static_cast<std::size_t>(c)); }

  int add_chart(MetricFn metric, double switch_radius, double domain_radius);
  void set_transition(int from, int to, MapFn map);

  bool in_domain(const ChartPoint& p) const;
  void require_in_domain(const ChartPoint& p) const;

  bool has_transition(int from, int to) const;
  ChartPoint transfer_point(const ChartPoint& p, int to) const;
  Eigen::VectorXd transfer_vector(const ChartPoint& p, const Eigen::VectorXd& v, int to) const;

  // Chart the point should be expressed in; identity when within the switch
  // radius, otherwise the reachable chart with the smallest coordinate norm.
  int preferred_chart(const ChartPoint& p) const;

  // Optional: isometric embedding into a Euclidean space, one map per chart.
  // Catalog spheres and products provide these; used by tests and by the
  // distance oracle, never by the core pipelines.
  void set_embeddings(std::vector<MapFn> per_chart,
                      std::function<ChartPoint(const Eigen::VectorXd&)> unembed);
  bool has_embedding() const { return !embeds_.empty(); }
  int embedding_dim() const { return embeds_.empty() ? 0 : embeds_.front().out; }
  Eigen::VectorXd embed(const ChartPoint& p) const;
  Eigen::VectorXd embed_vector(const ChartPoint& p, const Eigen::VectorXd& v) const;
  ChartPoint unembed(const Eigen::VectorXd& y) const;

  void set_distance(std::function<double(const ChartPoint&, const ChartPoint&)> dist);
  bool has_distance() const { return static_cast<bool>(dist_); }
  double distance(const ChartPoint& p, const ChartPoint& q) const { return dist_(p, q); }

 private:
  std::string label_;
  int dim_;
  std::vector<Chart> charts_;
  std::map<std::pair<int, int>, MapFn> transitions_;
  std::vector<MapFn> embeds_;
  std::function<ChartPoint(const Eigen::VectorXd&)> unembed_;
  std::function<double(const ChartPoint&, const ChartPoint&)> dist_;
};

using ManifoldPtr = std::shared_ptr<const ChartedManifold>;

}  // namespace tubegeo
