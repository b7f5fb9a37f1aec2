#include "loopcoprod/loopspace.hpp"

#include <algorithm>

#include "loopcoprod/coproduct.hpp"

namespace loopcoprod {

std::vector<int> e_infinity_columns(int n, int d) {
  if (n < 3) fail(Errc::UnsupportedDimension, "loop space tables need n >= 3");
  if (d < 0) fail(Errc::BadInput, "negative degree");
  std::vector<int> out;
  for (int p = 0; p <= n; ++p)
    if (d - p >= 0 && (d - p) % (n - 1) == 0) out.push_back(p);
  return out;
}

namespace {

void require_loop_space(const SpaceSpec& space) {
  if (space.infinite())
    fail(Errc::Unsupported, "loop space tables need a finite fundamental group");
  SpaceSpec::sphere_quotient(space.n, space.group);
  if (space.n < 3) fail(Errc::UnsupportedDimension, "loop space tables need n >= 3");
}

LoopEntry assemble_entry(const GradedAbelianGroup& base, int n, int d) {
  LoopEntry e;
  const std::vector<int> cols = e_infinity_columns(n, d);
  for (int p : cols) e.pieces.push_back(base.at(p));
  if (cols.size() == 1) {
    e.total = e.pieces[0];
    return e;
  }
  // Two columns: the lower one is the sub-piece of the filtration, the
  // higher one the quotient. The extension is known to split away from
  // column n-1; there a zero quotient still settles it.
  e.split = cols[1] != n - 1;
  if (e.split) {
    e.total = direct_sum(e.pieces[0], e.pieces[1]);
  } else if (e.pieces[1].is_zero()) {
    e.total = e.pieces[0];
  } else {
    e.resolved = false;
  }
  return e;
}

}  // namespace

ComponentTable component_homology(const SpaceSpec& space, int g, int max_deg,
                                  long long generator_cap) {
  require_loop_space(space);
  if (max_deg < 0) fail(Errc::BadInput, "negative degree");
  space.group->check_element(g);

  ComponentTable out;
  out.class_rep = g;
  out.class_size = 1;
  for (const auto& cls : space.group->conjugacy_classes())
    if (std::find(cls.begin(), cls.end(), g) != cls.end()) {
      out.class_size = static_cast<int>(cls.size());
      break;
    }
  out.centralizer = space.group->centralizer(g).group;
  out.base_homology = quotient_space_homology(space.n, out.centralizer, generator_cap);
  for (int d = 0; d <= max_deg; ++d)
    out.entries.push_back(assemble_entry(out.base_homology, space.n, d));
  return out;
}

LoopSpaceTable full_table(const SpaceSpec& space, int max_deg, long long generator_cap) {
  require_loop_space(space);
  if (max_deg < 0) fail(Errc::BadInput, "negative degree");

  LoopSpaceTable table;
  table.space = space;
  const auto classes = space.group->conjugacy_classes();

  // Exponents whose loop classes can land in the degree window.
  const long long kmax = std::max(1, max_deg / (space.n - 1) + 1);

  for (const auto& cls : classes) {
    ComponentTable comp = component_homology(space, cls.front(), max_deg, generator_cap);
    comp.class_size = static_cast<int>(cls.size());
    if (space.group->order() > 1) {
      for (long long k = 1; k <= kmax; ++k) {
        WitnessResult w = coproduct_witness(space, cls.front(), k);
        if (w.status == WitnessStatus::Exceptional) comp.witness_exceptional = true;
        if (w.status == WitnessStatus::NoneFound)
          fail(Errc::Unsupported, "no coproduct witness for class " +
                                      std::to_string(cls.front()) + " at k = " +
                                      std::to_string(k));
      }
    }
    table.components.push_back(std::move(comp));
  }

  for (const auto& comp : table.components)
    if (comp.witness_exceptional) {
      table.note =
          "the non-identity component has no two-sided coproduct witness at k = 1; "
          "the Chas-Sullivan product with x supplies the missing identification, so "
          "the entries stand unchanged";
      break;
    }

  table.totals.resize(max_deg + 1);
  table.total_known.assign(max_deg + 1, true);
  for (int d = 0; d <= max_deg; ++d) {
    AbelianGroup sum;
    for (const auto& comp : table.components) {
      if (!comp.entries[d].resolved) {
        table.total_known[d] = false;
        break;
      }
      sum = direct_sum(sum, comp.entries[d].total);
    }
    if (table.total_known[d]) table.totals[d] = std::move(sum);
  }
  return table;
}

}  // namespace loopcoprod
