#include "narayana/verify.hpp"

#include "narayana/census.hpp"

#include <algorithm>
#include <sstream>

namespace narayana {

namespace {

std::string stray_string(const Monomial& m, const Rational& c) {
  std::ostringstream out;
  out << "gf term outside 1 <= i <= j <= n: coefficient "
      << boost::multiprecision::numerator(c) << "/" << boost::multiprecision::denominator(c)
      << " at (n=" << m.n << ", i=" << m.i << ", j=" << m.j << ")";
  return out.str();
}

}  // namespace

OracleTables compute_oracle_tables(const VerifyOptions& options) {
  if (options.nmax < 1) {
    throw std::domain_error("verify: nmax must be at least 1");
  }
  OracleTables tables;

  if (options.use_census) {
    tables.census_nmax = std::min(options.nmax, options.census_bound);
    if (tables.census_nmax < options.nmax) {
      tables.notes.push_back("census restricted to n <= " + std::to_string(tables.census_nmax) +
                             " (enumeration bound " + std::to_string(options.census_bound) + ")");
    }
    CountTable merged;
    for (int n = 1; n <= tables.census_nmax; ++n) {
      for (const auto& [key, value] : census(n, options.census_bound)) {
        merged.set(key.i, key.n, key.j, value);
      }
    }
    tables.census = std::move(merged);
  }

  if (options.use_closed) {
    CountTable closed;
    for (int n = 1; n <= options.nmax; ++n) {
      for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
          closed.set(i, n, j, gen_narayana(i, n, j));
        }
      }
    }
    tables.closed = std::move(closed);
  }

  if (options.use_lgv) {
    CountTable lgv;
    for (int n = 1; n <= options.nmax; ++n) {
      for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
          lgv.set(i, n, j, lgv_count(i, n, j));
        }
      }
    }
    tables.lgv = std::move(lgv);
  }

  if (options.use_gf) {
    tables.gf_nmax = std::min(options.nmax, options.gf_bound);
    if (tables.gf_nmax < options.nmax) {
      tables.notes.push_back("gf restricted to n <= " + std::to_string(tables.gf_nmax) +
                             " (expansion bound " + std::to_string(options.gf_bound) + ")");
    }
    const Series3 g = gf_expand(tables.gf_nmax, options.gf_bound);
    CountTable gf;
    for (const auto& [m, c] : g.terms()) {
      if (m.n == 0) continue;  // the leading 1
      if (!cell_in_domain(m.i, m.n, m.j)) {
        tables.strays.push_back(stray_string(m, c));
        continue;
      }
      gf.set(m.i, m.n, m.j, boost::multiprecision::numerator(c));
    }
    tables.gf = std::move(gf);
  }

  return tables;
}

VerifyReport compare_oracle_tables(const OracleTables& tables, const VerifyOptions& options) {
  VerifyReport report;
  report.notes = tables.notes;

  for (int n = 1; n <= options.nmax; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        CellCheck check;
        check.cell = CellKey{i, n, j};
        if (tables.census && n <= tables.census_nmax) check.census = tables.census->at(i, n, j);
        if (tables.closed) check.closed = tables.closed->at(i, n, j);
        if (tables.lgv) check.lgv = tables.lgv->at(i, n, j);
        if (tables.gf && n <= tables.gf_nmax) check.gf = tables.gf->at(i, n, j);

        std::optional<Integer> reference;
        for (const auto* value : {&check.census, &check.closed, &check.lgv, &check.gf}) {
          if (!value->has_value()) continue;
          if (!reference) {
            reference = **value;
          } else if (**value != *reference) {
            check.ok = false;
          }
        }
        if (!check.ok) ++report.mismatches;
        report.cells.push_back(std::move(check));
      }
    }
  }

  for (const std::string& stray : tables.strays) {
    report.notes.push_back("MISMATCH " + stray);
    ++report.mismatches;
  }
  return report;
}

std::string render_verify_report(const VerifyReport& report, const VerifyOptions& options) {
  std::ostringstream out;
  out << "# verify nmax=" << options.nmax << " oracles=";
  bool first = true;
  for (const auto& [enabled, name] :
       {std::pair{options.use_census, "census"}, std::pair{options.use_closed, "closed"},
        std::pair{options.use_lgv, "lgv"}, std::pair{options.use_gf, "gf"}}) {
    if (!enabled) continue;
    if (!first) out << ',';
    out << name;
    first = false;
  }
  out << '\n';
  for (const std::string& note : report.notes) out << "# " << note << '\n';

  out << "i\tn\tj\tcensus\tclosed\tlgv\tgf\tstatus\n";
  auto field = [&out](const std::optional<Integer>& value) {
    out << '\t';
    if (value) {
      out << value->str();
    } else {
      out << '-';
    }
  };
  for (const CellCheck& check : report.cells) {
    out << check.cell.i << '\t' << check.cell.n << '\t' << check.cell.j;
    field(check.census);
    field(check.closed);
    field(check.lgv);
    field(check.gf);
    out << '\t' << (check.ok ? "ok" : "MISMATCH") << '\n';
  }
  out << "# cells=" << report.cells.size() << " mismatches=" << report.mismatches << '\n';
  return out.str();
}

}  // namespace narayana
