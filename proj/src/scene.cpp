#include "polyspan/scene.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace polyspan {

std::vector<Point> Scene::obstacle_polygon(std::size_t k) const {
    std::vector<Point> poly;
    poly.reserve(obstacles.at(k).size());
    for (VertexId v : obstacles[k]) poly.push_back(vertices.at(v));
    return poly;
}

void normalize_orientation(Scene& scene) {
    for (auto& obstacle : scene.obstacles) {
        bool indices_ok = std::all_of(obstacle.begin(), obstacle.end(),
                                      [&](VertexId v) { return v < scene.vertices.size(); });
        if (!indices_ok || obstacle.size() < 3) continue;
        std::vector<Point> poly;
        for (VertexId v : obstacle) poly.push_back(scene.vertices[v]);
        if (sgn(signed_area2(poly)) < 0) std::reverse(obstacle.begin(), obstacle.end());
    }
}

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::IndexOutOfRange: return "index out of range";
        case ViolationKind::TooFewVertices: return "obstacle has fewer than 3 vertices";
        case ViolationKind::RepeatedOnBoundary: return "vertex repeated on boundary";
        case ViolationKind::SharedVertex: return "shared vertex";
        case ViolationKind::Clockwise: return "obstacle is clockwise";
        case ViolationKind::SelfIntersecting: return "obstacle is not simple";
        case ViolationKind::ObstaclesIntersect: return "obstacles intersect";
        case ViolationKind::VertexInsideObstacle: return "vertex inside obstacle";
        case ViolationKind::VertexOnObstacleBoundary: return "vertex on obstacle boundary";
        case ViolationKind::CoincidentVertices: return "coincident vertices";
    }
    return "unknown";
}

bool ValidationResult::has(ViolationKind kind) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.kind == kind; });
}

std::string ValidationResult::summary() const {
    std::ostringstream os;
    for (const auto& v : violations) os << to_string(v.kind) << ": " << v.message << "\n";
    return os.str();
}

ValidationResult validate(const Scene& scene) {
    ValidationResult result;
    auto report = [&](ViolationKind kind, std::vector<std::size_t> idx, std::string msg) {
        result.violations.push_back({kind, std::move(idx), std::move(msg)});
    };
    const std::size_t n = scene.vertices.size();

    // Obstacles that are well-formed enough for geometric checks.
    std::vector<bool> usable(scene.obstacles.size(), true);
    std::map<VertexId, std::vector<std::size_t>> owners;

    for (std::size_t k = 0; k < scene.obstacles.size(); ++k) {
        const auto& obs = scene.obstacles[k];
        for (std::size_t i = 0; i < obs.size(); ++i) {
            if (obs[i] >= n) {
                report(ViolationKind::IndexOutOfRange, {k, obs[i]},
                       "obstacle " + std::to_string(k) + " position " + std::to_string(i) +
                           ": vertex index " + std::to_string(obs[i]) + " out of range (" +
                           std::to_string(n) + " vertices)");
                usable[k] = false;
            }
        }
        if (obs.size() < 3) {
            report(ViolationKind::TooFewVertices, {k},
                   "obstacle " + std::to_string(k) + " has " + std::to_string(obs.size()) +
                       " vertices");
            usable[k] = false;
        }
        std::set<VertexId> seen;
        for (VertexId v : obs) {
            if (!seen.insert(v).second) {
                report(ViolationKind::RepeatedOnBoundary, {k, v},
                       "obstacle " + std::to_string(k) + " repeats vertex " + std::to_string(v));
                usable[k] = false;
            }
        }
        for (VertexId v : seen) owners[v].push_back(k);
    }
    for (const auto& [v, ks] : owners) {
        if (ks.size() > 1) {
            std::vector<std::size_t> idx{v};
            idx.insert(idx.end(), ks.begin(), ks.end());
            std::string msg = "vertex " + std::to_string(v) + " is on obstacles";
            for (auto k : ks) msg += " " + std::to_string(k);
            report(ViolationKind::SharedVertex, idx, msg);
        }
    }

    {
        std::vector<VertexId> order(n);
        for (VertexId i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
            const auto& p = scene.vertices[a];
            const auto& q = scene.vertices[b];
            return p.x < q.x || (p.x == q.x && p.y < q.y);
        });
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            if (scene.vertices[order[i]] == scene.vertices[order[i + 1]]) {
                report(ViolationKind::CoincidentVertices, {order[i], order[i + 1]},
                       "vertices " + std::to_string(order[i]) + " and " +
                           std::to_string(order[i + 1]) + " coincide");
            }
        }
    }

    std::vector<std::vector<Point>> polys(scene.obstacles.size());
    for (std::size_t k = 0; k < scene.obstacles.size(); ++k) {
        if (!usable[k]) continue;
        polys[k] = scene.obstacle_polygon(k);
        const auto& poly = polys[k];
        const std::size_t m = poly.size();
        const int area = sgn(signed_area2(poly));
        if (area < 0) {
            report(ViolationKind::Clockwise, {k}, "obstacle " + std::to_string(k) + " is clockwise");
        }
        bool simple = area != 0;
        for (std::size_t i = 0; i < m && simple; ++i) {
            Segment e{poly[i], poly[(i + 1) % m]};
            for (std::size_t j = i + 1; j < m && simple; ++j) {
                Segment f{poly[j], poly[(j + 1) % m]};
                const bool adjacent = j == i + 1 || (i == 0 && j == m - 1);
                if (adjacent ? segments_properly_intersect(e, f) : segments_touch(e, f)) simple = false;
            }
        }
        if (!simple) {
            report(ViolationKind::SelfIntersecting, {k},
                   "obstacle " + std::to_string(k) + " is not a simple polygon");
            usable[k] = false;
        }
    }

    for (std::size_t k = 0; k < scene.obstacles.size(); ++k) {
        if (!usable[k]) continue;
        for (std::size_t l = k + 1; l < scene.obstacles.size(); ++l) {
            if (!usable[l]) continue;
            const auto& A = scene.obstacles[k];
            const auto& B = scene.obstacles[l];
            bool hit = false;
            for (std::size_t i = 0; i < A.size() && !hit; ++i) {
                VertexId a0 = A[i], a1 = A[(i + 1) % A.size()];
                Segment e{scene.vertices[a0], scene.vertices[a1]};
                for (std::size_t j = 0; j < B.size() && !hit; ++j) {
                    VertexId b0 = B[j], b1 = B[(j + 1) % B.size()];
                    Segment f{scene.vertices[b0], scene.vertices[b1]};
                    const bool share = a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1;
                    // Contact at a shared vertex index is reported as SharedVertex.
                    hit = share ? segments_properly_intersect(e, f) : segments_touch(e, f);
                }
            }
            if (hit) {
                report(ViolationKind::ObstaclesIntersect, {k, l},
                       "obstacles " + std::to_string(k) + " and " + std::to_string(l) + " intersect");
            }
        }
    }

    for (VertexId v = 0; v < n; ++v) {
        for (std::size_t k = 0; k < scene.obstacles.size(); ++k) {
            if (!usable[k]) continue;
            const auto& obs = scene.obstacles[k];
            if (std::find(obs.begin(), obs.end(), v) != obs.end()) continue;
            const Containment c = point_in_polygon(scene.vertices[v], polys[k]);
            if (c == Containment::Inside) {
                report(ViolationKind::VertexInsideObstacle, {v, k},
                       "vertex " + std::to_string(v) + " lies inside obstacle " + std::to_string(k));
            } else if (c == Containment::Boundary) {
                report(ViolationKind::VertexOnObstacleBoundary, {v, k},
                       "vertex " + std::to_string(v) + " lies on the boundary of obstacle " +
                           std::to_string(k));
            }
        }
    }
    return result;
}

bool parallel_to_cone_boundary(const Point& p, const Point& q) {
    const Rational dx = q.x - p.x;
    const Rational dy = q.y - p.y;
    if (sgn(dy) == 0) return true;
    // dy = +-sqrt3 * dx  <=>  dy -+ sqrt3 dx == 0 in Q(sqrt3)
    return ExactScalar(dy, -dx).sign() == 0 || ExactScalar(dy, dx).sign() == 0;
}

namespace {

std::vector<std::pair<VertexId, VertexId>> parallel_pairs(const Scene& scene) {
    std::vector<std::pair<VertexId, VertexId>> out;
    const auto& V = scene.vertices;
    for (VertexId i = 0; i < V.size(); ++i) {
        for (VertexId j = i + 1; j < V.size(); ++j) {
            if (parallel_to_cone_boundary(V[i], V[j])) out.emplace_back(i, j);
        }
    }
    return out;
}

std::vector<std::array<VertexId, 3>> collinear_triples(const Scene& scene) {
    std::vector<std::array<VertexId, 3>> out;
    const auto& V = scene.vertices;
    const std::size_t n = V.size();
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            if (V[i] == V[j]) continue;
            const Rational dx = V[j].x - V[i].x;
            const Rational dy = V[j].y - V[i].y;
            for (VertexId k = j + 1; k < n; ++k) {
                if (dx * (V[k].y - V[i].y) == dy * (V[k].x - V[i].x)) out.push_back({i, j, k});
            }
        }
    }
    return out;
}

// Violations that mention at least one of the given vertices.
bool general_position_near(const Scene& scene, const std::vector<VertexId>& moved) {
    const auto& V = scene.vertices;
    for (VertexId m : moved) {
        for (VertexId i = 0; i < V.size(); ++i) {
            if (i == m) continue;
            if (parallel_to_cone_boundary(V[m], V[i])) return false;
            for (VertexId j = i + 1; j < V.size(); ++j) {
                if (j == m) continue;
                if (orient(V[m], V[i], V[j]) == Orientation::Collinear) return false;
            }
        }
    }
    return true;
}

}  // namespace

std::string GeneralPositionReport::summary() const {
    std::ostringstream os;
    for (const auto& [a, b] : parallel_violations) {
        os << "vertices " << a << " and " << b << " lie on a line parallel to a cone boundary\n";
    }
    for (const auto& t : collinear_violations) {
        os << "vertices " << t[0] << ", " << t[1] << ", " << t[2] << " are collinear\n";
    }
    return os.str();
}

GeneralPositionReport check_general_position(const Scene& scene) {
    return {parallel_pairs(scene), collinear_triples(scene)};
}

Scene perturb_by_rotation(const Scene& scene, unsigned long k) {
    if (k == 0) throw std::invalid_argument("rotation parameter k must be positive");
    const Rational kk = Rational(k) * Rational(k);
    const Rational c = (kk - 1) / (kk + 1);
    const Rational s = Rational(2 * k) / (kk + 1);
    Scene out = scene;
    for (Point& p : out.vertices) {
        Rational x = c * p.x - s * p.y;
        Rational y = s * p.x + c * p.y;
        p = Point{std::move(x), std::move(y)};
    }
    return out;
}

std::pair<Scene, unsigned long> perturb_until_general_position(const Scene& scene,
                                                               unsigned long first_k,
                                                               unsigned long attempts) {
    if (!collinear_triples(scene).empty()) {
        throw GeneralPositionError("collinear vertices cannot be removed by rotation");
    }
    if (parallel_pairs(scene).empty()) return {scene, 0};
    for (unsigned long k = first_k; k < first_k + attempts; ++k) {
        Scene rotated = perturb_by_rotation(scene, k);
        if (parallel_pairs(rotated).empty()) return {std::move(rotated), k};
    }
    throw GeneralPositionError("no rotation found that clears the parallel violations");
}

namespace {

Rational linf(const Point& d) { return std::max(abs(d.x), abs(d.y)); }

// A rational direction strictly inside the counterclockwise sweep from e1 to e2.
Point inside_sweep(const Point& e1, const Point& e2) {
    const Rational c = e1.x * e2.y - e1.y * e2.x;
    const Rational l1 = linf(e1), l2 = linf(e2);
    Point sum{e1.x / l1 + e2.x / l2, e1.y / l1 + e2.y / l2};
    if (sgn(c) > 0) return sum;
    if (sgn(c) < 0) return Point{-sum.x, -sum.y};
    return Point{-e1.y, e1.x};
}

Point minus(const Point& a, const Point& b) { return Point{a.x - b.x, a.y - b.y}; }

Point offset(const Point& base, const Point& dir, const Rational& eps) {
    return Point{base.x + eps * dir.x, base.y + eps * dir.y};
}

}  // namespace

Scene split_shared_vertices(const Scene& input, SplitMode mode) {
    Scene scene = input;
    normalize_orientation(scene);
    const bool was_general = check_general_position(input).ok();

    for (;;) {
        std::map<VertexId, std::vector<std::size_t>> owners;
        for (std::size_t k = 0; k < scene.obstacles.size(); ++k) {
            for (VertexId v : std::set<VertexId>(scene.obstacles[k].begin(), scene.obstacles[k].end())) {
                owners[v].push_back(k);
            }
        }
        auto shared = std::find_if(owners.begin(), owners.end(),
                                   [](const auto& e) { return e.second.size() > 1; });
        if (shared == owners.end()) break;
        const VertexId s = shared->first;
        if (shared->second.size() > 2) {
            throw SceneError("vertex " + std::to_string(s) + " is shared by " +
                             std::to_string(shared->second.size()) + " obstacles");
        }
        const std::size_t kp = shared->second[0];
        const std::size_t kq = shared->second[1];
        const auto& P = scene.obstacles[kp];
        const auto& Q = scene.obstacles[kq];
        if (mode == SplitMode::Blocked) {
            std::size_t common = 0;
            for (VertexId v : P) common += std::count(Q.begin(), Q.end(), v);
            if (common > 1) {
                throw SceneError("obstacles " + std::to_string(kp) + " and " + std::to_string(kq) +
                                 " share more than one vertex; merging would enclose a hole");
            }
        }

        auto position = [](const std::vector<VertexId>& poly, VertexId v) {
            return static_cast<std::size_t>(std::find(poly.begin(), poly.end(), v) - poly.begin());
        };
        const std::size_t ip = position(P, s), iq = position(Q, s);
        const VertexId a = P[(ip + P.size() - 1) % P.size()], b = P[(ip + 1) % P.size()];
        const VertexId c = Q[(iq + Q.size() - 1) % Q.size()], d = Q[(iq + 1) % Q.size()];
        const Point& sp = scene.vertices[s];
        const Point da = minus(scene.vertices[a], sp), db = minus(scene.vertices[b], sp);
        const Point dc = minus(scene.vertices[c], sp), dd = minus(scene.vertices[d], sp);

        Point dir_keep, dir_new;
        if (mode == SplitMode::Passable) {
            dir_keep = inside_sweep(db, da);  // into P
            dir_new = inside_sweep(dd, dc);   // into Q
        } else {
            dir_keep = inside_sweep(da, dd);  // gap between P's prev and Q's next
            dir_new = inside_sweep(dc, db);
        }

        const VertexId fresh = scene.vertices.size();
        std::optional<Scene> accepted;
        Rational eps(1);
        for (int attempt = 0; attempt < 80 && !accepted; ++attempt, eps /= 2) {
            Scene trial = scene;
            trial.vertices[s] = offset(sp, dir_keep, eps);
            trial.vertices.push_back(offset(sp, dir_new, eps));
            if (mode == SplitMode::Passable) {
                trial.obstacles[kq][iq] = fresh;
            } else {
                std::vector<VertexId> merged;
                for (std::size_t t = 1; t < P.size(); ++t) merged.push_back(P[(ip + t) % P.size()]);
                merged.push_back(s);
                for (std::size_t t = 1; t < Q.size(); ++t) merged.push_back(Q[(iq + t) % Q.size()]);
                merged.push_back(fresh);
                trial.obstacles[kp] = std::move(merged);
                trial.obstacles.erase(trial.obstacles.begin() + static_cast<std::ptrdiff_t>(kq));
            }
            ValidationResult vr = validate(trial);
            const bool structurally_ok =
                std::all_of(vr.violations.begin(), vr.violations.end(),
                            [](const Violation& v) { return v.kind == ViolationKind::SharedVertex; });
            if (!structurally_ok) continue;
            if (was_general && !general_position_near(trial, {s, fresh})) continue;
            accepted = std::move(trial);
        }
        if (!accepted) {
            throw SceneError("could not separate shared vertex " + std::to_string(s));
        }
        scene = std::move(*accepted);
    }
    return scene;
}

std::vector<std::optional<Incidence>> incidence(const Scene& scene) {
    std::vector<std::optional<Incidence>> out(scene.vertices.size());
    for (std::size_t k = 0; k < scene.obstacles.size(); ++k) {
        const auto& obs = scene.obstacles[k];
        const std::size_t m = obs.size();
        for (std::size_t i = 0; i < m; ++i) {
            if (obs[i] >= out.size()) continue;
            out[obs[i]] = Incidence{k, obs[(i + m - 1) % m], obs[(i + 1) % m]};
        }
    }
    return out;
}

}  // namespace polyspan
