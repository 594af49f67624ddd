#include "glassnet/attractor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "glassnet/errors.hpp"

namespace glassnet {

const char* to_string(FrameKind k) {
  switch (k) {
    case FrameKind::MinimalEmbedding: return "minimal_embedding";
    case FrameKind::Recentered: return "recentered";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::IdealUniqueOrbit: return "IdealUniqueOrbit";
    case Verdict::UniqueOrbit: return "UniqueOrbit";
    case Verdict::Degenerate: return "Degenerate";
  }
  return "?";
}

Vector AnalysisFrame::to_source(const Vector& y) const {
  return embedding.unembed(embedding.project(y));
}

namespace {

int frame_row(const Embedding& emb, const Wall& w) {
  const auto row = emb.row_of(w.coordinate, w.threshold_index);
  if (!row)
    throw DomainError("analysis frame has no coordinate for wall " + w.descriptor());
  return *row;
}

AnalysisFrame make_frame(const GlassNetwork& net, const CycleSpec& cycle, std::size_t base) {
  const bool ideal = spine(net, cycle).empty;
  Embedding emb = ideal ? minimal_embedding(net, cycle) : recenter_at_vertex(net, cycle).embedding;
  GlassNetwork binary = embed_network(net, emb, cycle.regions);

  CycleSpec orthants;
  for (const auto& r : cycle.regions) orthants.regions.push_back(emb.orthant_of(r));

  std::vector<int> exit_rows;
  for (std::size_t s = 0; s < cycle.size(); ++s)
    exit_rows.push_back(frame_row(emb, cycle.wall(net, base + s + 1)));
  const int base_row = frame_row(emb, cycle.wall(net, base));

  ConeSection cone;
  const RegionIndex& entered = orthants.region(base);
  for (int r = 0; r < emb.dimension(); ++r)
    cone.signs.push_back(r == base_row ? 0 : (entered[static_cast<std::size_t>(r)] == 1 ? 1 : -1));

  return AnalysisFrame{ideal ? FrameKind::MinimalEmbedding : FrameKind::Recentered,
                       std::move(emb),
                       std::move(binary),
                       std::move(orthants),
                       base,
                       std::move(exit_rows),
                       base_row,
                       std::move(cone)};
}

double max_norm(const Vector& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

InvarianceCertificate vertex_check(const LinearFractionalMap& map, const Box& box,
                                   const std::function<Vector(const Vector&)>& into,
                                   const std::function<Vector(const Vector&)>& back,
                                   double pinned_tol) {
  InvarianceCertificate cert{true, kInfinity};
  for (const Vector& x : box.vertices()) {
    const Vector image = back(apply(map, into(x)).point);
    for (std::size_t i = 0; i < box.size(); ++i) {
      const Interval& iv = box.intervals[i];
      const double xi = image[static_cast<Eigen::Index>(i)];
      if (iv.degenerate()) {
        if (std::abs(xi - iv.lo) > pinned_tol) {
          cert.holds = false;
          cert.margin = std::min(cert.margin, -std::abs(xi - iv.lo));
        }
        continue;
      }
      const double m = std::min(xi - iv.lo, iv.hi - xi);
      cert.margin = std::min(cert.margin, m);
      if (!(m > 0.0)) cert.holds = false;
    }
  }
  return cert;
}

}  // namespace

ReturnMap return_map(const GlassNetwork& net, const CycleSpec& cycle, std::size_t base_wall) {
  if (base_wall >= cycle.size())
    throw DomainError("base wall index " + std::to_string(base_wall) + " out of range");
  AnalysisFrame frame = make_frame(net, cycle, base_wall);
  const int m = frame.embedding.dimension();

  ExactFractionalMap composite(m);
  std::vector<LinearFractionalMap> steps;
  for (std::size_t s = 0; s < cycle.size(); ++s) {
    const auto focal = exact_embedded_focal(net, frame.embedding, cycle.region(base_wall + s));
    const auto step = ExactFractionalMap::wall_map(focal, frame.exit_rows[s]);
    composite = compose(step, composite);
    steps.push_back(step.to_double());
  }
  return {composite.to_double(), std::move(steps), std::move(frame)};
}

Box trapping_box(const GlassNetwork& net, const CycleSpec& cycle, std::size_t base_wall) {
  Box box = net.wall_closure(cycle.wall(net, base_wall));
  const Spine s = spine(net, cycle);
  const std::vector<int> sw = switching_coordinates(net, cycle);
  std::optional<Vector> vertex;
  if (!s.empty) vertex = spine_vertex(net, s);

  for (int i = 0; i < net.dimension(); ++i) {
    Interval& iv = box.intervals[static_cast<std::size_t>(i)];
    if (iv.degenerate()) continue;

    double fmin = kInfinity, fmax = -kInfinity;
    for (const auto& r : cycle.regions) {
      fmin = std::min(fmin, net.focal(r)[i]);
      fmax = std::max(fmax, net.focal(r)[i]);
    }

    if (vertex && !std::binary_search(sw.begin(), sw.end(), i)) {
      const double a = (*vertex)[i];
      double u = 0.0, v = kInfinity;
      for (const auto& r : cycle.regions) {
        const double d = std::abs(net.focal(r)[i] - a);
        u = std::max(u, d);
        v = std::min(v, d);
      }
      const Interval fiber = fmin > a ? Interval{a + v / 2, a + u + 1} : Interval{a - u - 1, a - v / 2};
      iv = intersect(iv, fiber);
      continue;
    }
    if (iv.lo == -kInfinity) iv.lo = std::min(net.threshold(i, 0), fmin) - 1.0;
    if (iv.hi == kInfinity) iv.hi = std::max(net.threshold(i, net.ladder(i).size() - 1), fmax) + 1.0;
  }
  return box;
}

InvarianceCertificate check_invariance(const LinearFractionalMap& map, const Box& box,
                                       double pinned_tol) {
  const auto same = [](const Vector& x) { return x; };
  return vertex_check(map, box, same, same, pinned_tol);
}

InvarianceCertificate check_invariance(const LinearFractionalMap& map, const Box& box,
                                       const AnalysisFrame& frame, double pinned_tol) {
  return vertex_check(
      map, box, [&](const Vector& x) { return frame.from_source(x); },
      [&](const Vector& y) { return frame.to_source(y); }, pinned_tol);
}

CycleClassification classify(const GlassNetwork& net, const CycleSpec& cycle,
                             const ClassifyOptions& options) {
  CycleClassification out;
  out.cycle = cycle;
  out.certificates.cycle = verify_cyclic_attractor(net, cycle);
  out.spine = spine(net, cycle);
  out.base_wall = options.base_wall;

  const ReturnMap rm = return_map(net, cycle, options.base_wall);
  const AnalysisFrame& frame = rm.frame;
  const LinearFractionalMap& L = rm.map;
  const Wall base = cycle.wall(net, options.base_wall);
  const int m = frame.embedding.dimension();
  out.frame = frame.kind;

  std::optional<Vector> y_star;

  if (frame.kind == FrameKind::MinimalEmbedding) {
    const Box H = trapping_box(net, cycle, options.base_wall);
    out.certificates.trapping_box = H;
    out.certificates.invariance = check_invariance(L, H, frame);
    for (int r = 0; r < m; ++r) out.kept.push_back(r);

    Vector y = frame.from_source(H.barycenter());
    double previous = std::numeric_limits<double>::quiet_NaN();
    bool converged = false;
    for (int it = 1; it <= options.max_iterations; ++it) {
      const Vector next = frame.from_source(frame.to_source(apply(L, y).point));
      const double step = max_norm(next - y);
      if (previous > 0.0 && step > 1e-10) out.certificates.contraction_rate = step / previous;
      previous = step;
      y = next;
      out.certificates.iterations = it;
      if (step < options.fixed_point_tol) {
        converged = true;
        break;
      }
    }
    if (!converged) throw NoConvergenceError("fixed-point iteration", options.max_iterations);
    out.lambda = 1.0 + L.psi.dot(y);
    out.verdict = Verdict::IdealUniqueOrbit;
    y_star = y;
  } else {
    for (int i : switching_coordinates(frame.network, frame.cycle)) out.kept.push_back(i);
    out.compressed = static_cast<int>(out.kept.size()) < m;
    const auto d = static_cast<Eigen::Index>(out.kept.size());

    Matrix Ak(d, d);
    Vector psik(d);
    ConeSection cone;
    for (Eigen::Index r = 0; r < d; ++r) {
      const int i = out.kept[static_cast<std::size_t>(r)];
      for (Eigen::Index c = 0; c < d; ++c) Ak(r, c) = L.A(i, out.kept[static_cast<std::size_t>(c)]);
      psik[r] = L.psi[i];
      cone.signs.push_back(frame.base_cone.signs[static_cast<std::size_t>(i)]);
    }

    const EigenPair eig = dominant_eigenpair(Ak, cone, options.eigen_tol, options.max_iterations);
    const double delta = projective_diameter(Ak, cone);
    out.certificates.projective_diameter = delta;
    if (std::isfinite(delta)) {
      out.certificates.contraction_rate = contraction_rate(delta);
      out.certificates.birkhoff_bound = birkhoff_iteration_bound(delta, options.eigen_tol);
    }
    out.certificates.iterations = eig.iterations;
    out.certificates.eigen_residual = eig.residual;
    out.lambda = eig.lambda;

    if (out.lambda > 1.0 + options.degeneracy_tol) {
      const double denom = psik.dot(eig.vector);
      if (!(denom > 0.0))
        throw ContainmentFailure("dominant eigen-ray of cycle " + cycle.to_string() +
                                 " does not meet the base wall section");
      const Vector yk = (out.lambda - 1.0) / denom * eig.vector;

      const Box H = trapping_box(net, cycle, options.base_wall);
      Vector y = frame.from_source(H.barycenter());
      for (Eigen::Index r = 0; r < d; ++r) y[out.kept[static_cast<std::size_t>(r)]] = yk[r];

      if (out.compressed) {
        bool converged = false;
        for (int it = 1; it <= options.max_iterations; ++it) {
          const Vector next = apply(L, y).point;
          const double step = max_norm(next - y);
          y = next;
          if (step < options.fixed_point_tol) {
            converged = true;
            break;
          }
        }
        if (!converged) throw NoConvergenceError("fixed-point lift", options.max_iterations);

        Box T = H;
        const Vector x = frame.to_source(y);
        for (int i : out.kept) {
          const auto v = static_cast<std::size_t>(frame.embedding.rows()[static_cast<std::size_t>(i)].variable);
          T.intervals[v] = Interval{x[static_cast<Eigen::Index>(v)], x[static_cast<Eigen::Index>(v)]};
        }
        out.certificates.trapping_box = T;
        out.certificates.invariance = check_invariance(L, T, frame);
      }

      const Vector x = frame.to_source(y);
      const double miss = net.wall_closure(base).distance(x);
      if (miss > 1e-9)
        throw ContainmentFailure("fixed point of cycle " + cycle.to_string() +
                                 " lies outside its base wall (distance " + std::to_string(miss) + ")");
      out.verdict = Verdict::UniqueOrbit;
      y_star = y;
    } else {
      out.verdict = Verdict::Degenerate;
      out.marginal = std::abs(out.lambda - 1.0) <= options.degeneracy_tol;
    }
  }

  if (y_star) {
    const Vector& y = *y_star;
    out.certificates.eigen_residual = (L.A * y - out.lambda * y).norm();
    Vector x = frame.to_source(y);
    x[base.coordinate] = net.threshold(base.coordinate, base.threshold_index);
    out.fixed_point = x;
    out.period = std::log(1.0 + L.psi.dot(y));

    Vector p = y;
    double t = 0.0;
    for (std::size_t s = 0; s < cycle.size(); ++s) {
      const MapImage img = apply(rm.steps[s], p);
      t += img.transit_time();
      p = img.point;
      const Wall w = cycle.wall(net, options.base_wall + s + 1);
      Vector q = frame.to_source(p);
      q[w.coordinate] = net.threshold(w.coordinate, w.threshold_index);
      out.waypoints.push_back({w, std::move(q), t});
    }
  }
  return out;
}

std::vector<CycleSpec> find_cyclic_attractors(const GlassNetwork& net) {
  const TransitionGraph g = state_transition_graph(net);
  const std::size_t n = g.nodes.size();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> next(n, none);
  for (std::size_t i = 0; i < n; ++i)
    if (g.successors[i].size() == 1) next[i] = g.successors[i][0];

  std::vector<int> state(n, 0);  // 0 unseen, 1 on current path, 2 done
  std::vector<CycleSpec> out;
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::size_t> path;
    std::size_t cur = start;
    while (cur != none && state[cur] == 0) {
      state[cur] = 1;
      path.push_back(cur);
      cur = next[cur];
    }
    if (cur != none && state[cur] == 1) {
      const auto first = std::find(path.begin(), path.end(), cur);
      CycleSpec c;
      for (auto it = first; it != path.end(); ++it) c.regions.push_back(g.nodes[*it]);
      std::rotate(c.regions.begin(), std::min_element(c.regions.begin(), c.regions.end()),
                  c.regions.end());
      try {
        verify_cyclic_attractor(net, c);
        out.push_back(std::move(c));
      } catch (const CycleViolation&) {
      }
    }
    for (std::size_t p : path) state[p] = 2;
  }
  std::sort(out.begin(), out.end(),
            [](const CycleSpec& a, const CycleSpec& b) { return a.regions < b.regions; });
  return out;
}

}  // namespace glassnet
