#include "margpoly/volume.hpp"

#include <algorithm>
#include <unordered_map>

#include <boost/dynamic_bitset.hpp>

#include "margpoly/double_description.hpp"
#include "margpoly/error.hpp"
#include "margpoly/linalg.hpp"

namespace margpoly {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Face {
  Rational volume;  // volume of the projection onto the pivot coordinates
  std::vector<RationalVector> basis;
  std::vector<std::size_t> pivots;
  std::size_t first = 0;  // a point of the face
};

// Each face's volume is the sum of pyramids over its facets with apex at its
// first point, measured in the coordinates picked out by its echelon pivots.
class FaceVolumes {
 public:
  FaceVolumes(const std::vector<RationalVector>& points, std::vector<Bits> tight)
      : points_(points), tight_(std::move(tight)), dim_(points.empty() ? 0 : points.front().size()) {}

  const Face& face(const Bits& set) {
    if (auto it = memo_.find(set); it != memo_.end()) return it->second;
    Face f;
    f.first = set.find_first();
    Echelon e(dim_);
    for (auto i = set.find_next(f.first); i != Bits::npos; i = set.find_next(i)) e.insert(difference(i, f.first));
    f.basis = std::move(e.rows);
    f.pivots = std::move(e.pivots);
    const std::size_t k = f.pivots.size();
    if (k == 0) {
      f.volume = 1;
    } else {
      Rational sum = 0;
      for (const Bits& g : facets(set)) {
        if (g.test(f.first)) continue;
        const Face& child = face(g);
        sum += child.volume * abs(height(child, f.pivots, f.first));
      }
      f.volume = sum / k;
    }
    return memo_.emplace(set, std::move(f)).first->second;
  }

  std::vector<Bits> facets(const Bits& set) const {
    std::vector<Bits> candidates;
    for (const Bits& t : tight_) {
      Bits g = set & t;
      if (g.none() || g == set) continue;
      candidates.push_back(std::move(g));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<Bits> maximal;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      bool contained = false;
      for (std::size_t j = 0; j < candidates.size() && !contained; ++j) {
        contained = j != i && candidates[i].is_proper_subset_of(candidates[j]);
      }
      if (!contained) maximal.push_back(candidates[i]);
    }
    return maximal;
  }

  // Determinant of [child basis; apex - child point] restricted to the parent's
  // pivot columns, which are the child's pivots plus one extra column.
  Rational height(const Face& child, const std::vector<std::size_t>& parent_pivots, std::size_t apex) const {
    return height(child, parent_pivots, difference(apex, child.first));
  }

  Rational height(const Face& child, const std::vector<std::size_t>& parent_pivots, const RationalVector& w) const {
    std::size_t extra = dim_;
    for (std::size_t p : parent_pivots) {
      if (!std::binary_search(child.pivots.begin(), child.pivots.end(), p)) {
        extra = p;
        break;
      }
    }
    Rational det = w[extra];
    for (std::size_t i = 0; i < child.pivots.size(); ++i) det -= w[child.pivots[i]] * child.basis[i][extra];
    return det;
  }

  RationalVector difference(std::size_t i, std::size_t j) const {
    RationalVector d(dim_);
    for (std::size_t c = 0; c < dim_; ++c) d[c] = points_[i][c] - points_[j][c];
    return d;
  }

  std::size_t num_faces() const { return memo_.size(); }

 private:
  const std::vector<RationalVector>& points_;
  std::vector<Bits> tight_;
  std::size_t dim_;
  std::unordered_map<Bits, Face> memo_;
};

RationalVector barycenter(const std::vector<RationalVector>& points) {
  RationalVector c(points.front().size());
  for (const auto& p : points) {
    for (std::size_t j = 0; j < c.size(); ++j) c[j] += p[j];
  }
  const Rational n(static_cast<long long>(points.size()));
  for (auto& x : c) x /= n;
  return c;
}

}  // namespace

VolumeResult volume(const std::vector<RationalVector>& vertices, const std::vector<Row>& inequalities,
                    const RationalVector& anchor) {
  VolumeResult result;
  result.vertices = vertices.size();
  if (vertices.empty()) {
    result.full_dimensional = false;
    return result;
  }
  const std::size_t d = vertices.front().size();
  if (anchor.size() != d) throw Error(ErrorKind::Invalid, "anchor length does not match dimension");
  if (d == 0) {
    result.volume = 1;
    return result;
  }
  if (affine_hull(vertices).dimension < d) {
    result.full_dimensional = false;
    result.volume = 0;
    return result;
  }

  std::vector<Bits> tight;
  for (const auto& row : inequalities) {
    Bits t(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const Rational lhs = dot(row.a, vertices[i]);
      if (lhs > row.c) throw Error(ErrorKind::Invalid, "inequality violated by a vertex");
      if (lhs == row.c) t.set(i);
    }
    if (dot(row.a, anchor) > row.c) throw Error(ErrorKind::Invalid, "anchor lies outside the body");
    tight.push_back(std::move(t));
  }
  Bits all(vertices.size());
  all.set();
  FaceVolumes faces(vertices, tight);
  std::vector<std::size_t> every(d);
  for (std::size_t j = 0; j < d; ++j) every[j] = j;
  Rational sum = 0;
  const auto top = faces.facets(all);
  result.facets = top.size();
  for (const Bits& g : top) {
    const Face& child = faces.face(g);
    RationalVector w(d);
    for (std::size_t j = 0; j < d; ++j) w[j] = anchor[j] - vertices[child.first][j];
    sum += child.volume * abs(faces.height(child, every, w));
  }
  result.volume = sum / d;
  return result;
}

VolumeResult volume(const PointList& points, const RationalVector& anchor) {
  if (points.empty()) return volume(std::vector<RationalVector>{}, {}, anchor);
  const LinearSystem h = vrep_to_hrep(points);
  if (!h.equalities.empty()) {
    VolumeResult r;
    r.full_dimensional = false;
    r.vertices = points.size();
    return r;
  }
  return volume(points.points, h.inequalities, anchor);
}

VolumeResult volume(const PointList& points) {
  if (points.empty()) return volume(points, RationalVector(points.dim));
  return volume(points, barycenter(points.points));
}

VolumeResult volume(const LinearSystem& system) {
  const PointList v = hrep_to_vrep(system);
  if (v.empty()) {
    VolumeResult r;
    r.full_dimensional = false;
    return r;
  }
  std::vector<Row> rows = system.inequalities;
  return volume(v.points, rows, barycenter(v.points));
}

}  // namespace margpoly
