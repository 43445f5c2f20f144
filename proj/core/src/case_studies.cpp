#include "wallkit/case_studies.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "wallkit/error.hpp"
#include "wallkit/isometry.hpp"
#include "wallkit/nikulin.hpp"
#include "wallkit/walls.hpp"

namespace wallkit {

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](Check const& c) { return c.pass; });
}

namespace {

std::string format(IntVector const& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + "]";
}

std::string format(LatticeVector const& v) { return format(v.coords()); }

std::string format_bool(bool b) { return b ? "true" : "false"; }

std::string format_pair(Integer const& q, Integer const& d) {
  return "(" + to_string(q) + "," + to_string(d) + ")";
}

// Sign-normalized ray for set comparisons.
IntVector ray_key(LatticeVector const& v) {
  IntVector c = primitive_part(v).coords();
  for (auto const& x : c) {
    if (x == 0) continue;
    if (x < 0) c = -c;
    break;
  }
  return c;
}

std::string format_rays(std::vector<IntVector> rays) {
  std::sort(rays.begin(), rays.end());
  std::string out = "{";
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (i) out += ",";
    out += format(rays[i]);
  }
  return out + "}";
}

class Builder {
 public:
  explicit Builder(std::string suite) { report_.suite = std::move(suite); }

  void expect(std::string description, std::string expected, std::string actual) {
    bool pass = expected == actual;
    report_.checks.push_back({std::move(description), std::move(expected), std::move(actual), pass});
  }

  void invariants(std::string const& label, LatticeVector const& v, long long q, long long d) {
    expect("(q, div) of " + label, format_pair(q, d), format_pair(norm(v), divisibility(v)));
  }

  void wall(std::string const& label, LatticeVector const& v, bool expected) {
    expect("is_wall(" + label + ")", format_bool(expected), format_bool(is_wall(v)));
  }

  void rays(std::string const& label, PicardEmbedding const& pic,
            std::vector<LatticeVector> const& expected) {
    WallReport report = walls_in_picard(pic);
    std::vector<IntVector> actual;
    for (auto const& w : report.walls) actual.push_back(ray_key(w.ray));
    std::vector<IntVector> wanted;
    for (auto const& v : expected) wanted.push_back(ray_key(v));
    expect("wall ray count of " + label, std::to_string(expected.size()),
           std::to_string(actual.size()));
    expect("wall rays of " + label, format_rays(wanted), format_rays(actual));
    expect("enumeration of " + label + " is complete", "true", format_bool(report.complete));
  }

  // Runs a check body, recording an exception as a failed check.
  void guarded(std::string const& description, std::function<void()> const& body) {
    try {
      body();
    } catch (std::exception const& e) {
      report_.checks.push_back({description, "no error", e.what(), false});
    }
  }

  VerificationReport take() { return std::move(report_); }

 private:
  VerificationReport report_;
};

}  // namespace

VerificationReport verify_generic() {
  using namespace named;
  Builder b("generic");
  b.guarded("generic Picard lattice", [&] {
    b.invariants("delta'", delta_prime(), -4, 2);
    b.invariants("sigma'", sigma_prime(), -4, 2);
    b.wall("delta'", delta_prime(), true);
    b.wall("sigma'", sigma_prime(), true);
    PicardEmbedding pic(lambda_lattice(), {h1(), h2()});
    b.rays("<h1,h2>", pic, {delta_prime(), sigma_prime()});
  });
  return b.take();
}

VerificationReport verify_one_curve() {
  using namespace named;
  Builder b("one-curve");
  b.guarded("one-curve Picard lattice", [&] {
    LatticeVector dc = L2(-1);
    b.invariants("D_C'", dc, -4, 2);
    b.invariants("D_C' - h1", dc - h1(), -6, 2);
    b.wall("D_C'", dc, true);
    b.wall("D_C' - h1", dc - h1(), true);
    PicardEmbedding pic(lambda_lattice(), {dc, h1(), h2()});
    b.rays("<D_C',h1,h2>", pic,
           {dc, delta_prime(), sigma_prime(), dc + h1(), dc - h1(), dc + h2(), dc - h2()});
  });
  return b.take();
}

VerificationReport verify_two_curves() {
  using namespace named;
  Builder b("two-curves");
  b.guarded("two-curve Picard lattice", [&] {
    LatticeVector dc = e1_lambda();
    LatticeVector two = Integer(2) * dc;
    b.invariants("D_C'", dc, -2, 1);
    b.invariants("2D_C' - delta'", two - delta_prime(), -12, 2);
    b.invariants("2D_C' - sigma'", two - sigma_prime(), -12, 2);
    b.wall("D_C'", dc, true);
    b.wall("2D_C' - delta'", two - delta_prime(), true);
    b.wall("2D_C' - sigma'", two - sigma_prime(), true);
    b.invariants("D_C' - h1", dc - h1(), -4, 1);
    b.wall("D_C' - h1", dc - h1(), false);
    PicardEmbedding pic(lambda_lattice(), {dc, h1(), h2()});
    b.rays("<D_C',h1,h2>", pic,
           {dc, delta_prime(), sigma_prime(), two + delta_prime(), two - delta_prime(),
            two + sigma_prime(), two - sigma_prime()});
  });
  return b.take();
}

VerificationReport verify_elliptic() {
  using namespace named;
  Builder b("elliptic");
  b.guarded("elliptic Picard lattice", [&] {
    LatticeVector dg = L2(1) + e2_lambda();
    LatticeVector a = dg - h1();
    LatticeVector image = Integer(2) * dg - delta_prime();
    b.invariants("D_gamma'", dg, 0, 1);
    b.invariants("A' = D_gamma' - h1", a, -2, 1);
    b.wall("A'", a, true);
    b.expect("R_A'(sigma')", format(image), format(apply(reflection(a), sigma_prime())));
    b.invariants("2D_gamma' - delta'", image, -4, 2);
    b.wall("2D_gamma' - delta'", image, true);
  });
  return b.take();
}

VerificationReport verify_involution_obstruction() {
  using namespace named;
  Builder b("involution");
  b.guarded("involution obstruction", [&] {
    constexpr std::size_t kSamples = 10000;
    ScanReport scan = orthocomplement_square_scan(sigma_prime(), 2, kSamples, Integer(-2));
    b.expect("accepted div-2 samples in sigma'-perp", std::to_string(kSamples),
             std::to_string(scan.accepted));
    std::string residues;
    for (auto const& [r, count] : scan.q_mod4) residues += (residues.empty() ? "" : ",") + std::to_string(r);
    b.expect("q mod 4 residues in sigma'-perp", "0", residues);
    b.expect("samples with q = -2", "0", std::to_string(scan.target_hits));
    b.invariants("h2", h2(), -2, 2);
    b.expect("reflection(h2) integral", "true", format_bool(is_reflection_integral(h2())));
  });
  return b.take();
}

std::vector<std::string> suite_names() {
  return {"generic", "one-curve", "two-curves", "elliptic", "involution"};
}

std::vector<VerificationReport> run_suites(std::string_view name) {
  using Suite = VerificationReport (*)();
  std::vector<std::pair<std::string_view, Suite>> const all = {
      {"generic", verify_generic},
      {"one-curve", verify_one_curve},
      {"two-curves", verify_two_curves},
      {"elliptic", verify_elliptic},
      {"involution", verify_involution_obstruction},
  };
  std::vector<VerificationReport> out;
  for (auto const& [n, f] : all)
    if (name == "all" || name == n) out.push_back(f());
  if (out.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + std::string(name) + "'");
  }
  return out;
}

}  // namespace wallkit
