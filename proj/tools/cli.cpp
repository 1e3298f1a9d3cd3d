#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "semirank/semirank.hpp"

namespace semirank::cli {

namespace {

struct FamilyArgs {
  std::string family;
  std::size_t n = 0;
  std::string group;
  std::size_t index = 0;
  std::size_t period = 0;
  std::size_t m = 0;
};

struct CommonArgs {
  FamilyArgs fam;
  std::string table_path;
  bool trusted = false;
  std::uint64_t guard_subsets = 10'000'000;
  unsigned threads = 1;
  std::string out_path;
};

struct Range {
  std::size_t lo;
  std::size_t hi;
};

Range parse_range(std::string const& text) {
  auto const to_size = [&](std::string const& s) -> std::size_t {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &pos);
    } catch (std::exception const&) {
      pos = std::string::npos;
    }
    if (pos != s.size()) throw ParameterError("bad range '" + text + "' (expected a or a..b)");
    return static_cast<std::size_t>(v);
  };
  if (auto const dots = text.find(".."); dots != std::string::npos) {
    Range r{to_size(text.substr(0, dots)), to_size(text.substr(dots + 2))};
    if (r.lo > r.hi) throw ParameterError("empty range '" + text + "'");
    return r;
  }
  auto const v = to_size(text);
  return {v, v};
}

std::vector<std::string> split_list(std::string const& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::size_t require(std::size_t value, char const* flag, std::string const& family) {
  if (value == 0) throw ParameterError("family '" + family + "' needs " + flag);
  return value;
}

NamedSemigroup build_family(FamilyArgs const& f) {
  auto const& fam = f.family;
  auto const size_param = [&] { return f.m != 0 ? f.m : require(f.n, "--m", fam); };
  if (fam == "brandt") {
    if (f.group.empty()) throw ParameterError("family 'brandt' needs --group");
    auto const n = require(f.n, "--n", fam);
    return {fam, "group=" + f.group + " n=" + std::to_string(n),
            brandt(group_by_name(f.group), n).semigroup};
  }
  if (fam == "bn") {
    auto const n = require(f.n, "--n", fam);
    return {fam, "n=" + std::to_string(n), brandt(cyclic_group(1), n).semigroup};
  }
  if (fam == "monogenic") {
    auto const i = require(f.index, "--index", fam);
    auto const p = require(f.period, "--period", fam);
    return {fam, "index=" + std::to_string(i) + " period=" + std::to_string(p),
            monogenic(i, p)};
  }
  if (fam == "tn") {
    auto const n = require(f.n, "--n", fam);
    return {fam, "n=" + std::to_string(n), full_transformation(n).semigroup};
  }
  if (fam == "on") {
    auto const n = require(f.n, "--n", fam);
    return {fam, "n=" + std::to_string(n), order_preserving_singular(n).semigroup};
  }
  if (fam == "cyclic") {
    auto const m = size_param();
    return {fam, "m=" + std::to_string(m), cyclic_group(m).semigroup()};
  }
  if (fam == "symmetric") {
    auto const m = size_param();
    return {fam, "m=" + std::to_string(m), symmetric_group(m).semigroup()};
  }
  if (fam == "leftzero" || fam == "rightzero") {
    auto const m = size_param();
    return {fam, "m=" + std::to_string(m), fam == "leftzero" ? left_zero(m) : right_zero(m)};
  }
  throw ParameterError("unknown family '" + fam +
                       "' (brandt, bn, monogenic, tn, on, cyclic, symmetric, leftzero, "
                       "rightzero)");
}

NamedSemigroup load_input(CommonArgs const& c) {
  if (!c.table_path.empty()) {
    if (!c.fam.family.empty()) throw ParameterError("give either a table file or --family");
    auto s = read_table_file(c.table_path, c.trusted ? Trust::trusted : Trust::checked);
    return {"table", "path=" + c.table_path, std::move(s)};
  }
  if (c.fam.family.empty()) throw ParameterError("no input: give a table file or --family");
  return build_family(c.fam);
}

void add_family_options(CLI::App* cmd, FamilyArgs& f, bool with_family_flag) {
  if (with_family_flag) cmd->add_option("--family", f.family, "Semigroup family");
  cmd->add_option("--n", f.n, "Degree / Brandt index set size");
  cmd->add_option("--group", f.group, "Group for brandt: Z<m> or S<m>");
  cmd->add_option("--index", f.index, "Monogenic index");
  cmd->add_option("--period", f.period, "Monogenic period");
  cmd->add_option("--m", f.m, "Order for cyclic, symmetric, leftzero, rightzero");
}

void add_common_options(CLI::App* cmd, CommonArgs& c) {
  cmd->add_flag("--trusted", c.trusted, "Skip the associativity check on table files");
  cmd->add_option("--guard-subsets", c.guard_subsets, "Max candidate subsets per search level");
  cmd->add_option("--threads", c.threads, "Worker threads for the prime-subset search")
      ->check(CLI::Range(1U, 1024U));
  cmd->add_option("--out", c.out_path, "Output path");
}

RankGuards guards_of(CommonArgs const& c) {
  RankGuards g;
  g.subset_candidates = c.guard_subsets;
  return g;
}

SearchOptions search_of(CommonArgs const& c) {
  SearchOptions o;
  o.threads = c.threads;
  return o;
}

using Clock = std::chrono::steady_clock;

void print_elapsed(std::ostream& out, Clock::time_point start) {
  auto const ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  out << "elapsed_ms=" << std::fixed << std::setprecision(3) << ms << '\n';
  out.unsetf(std::ios::floatfield);
}

void print_header(std::ostream& out, NamedSemigroup const& inst) {
  out << "family=" << inst.family << '\n';
  out << "params=" << inst.params << '\n';
  out << "m=" << inst.semigroup.order() << '\n';
}

// --- build -----------------------------------------------------------------

int cmd_build(FamilyArgs const& fam, CommonArgs const& c, std::ostream& out) {
  auto const inst = build_family(fam);
  if (c.out_path.empty()) {
    write_table(out, inst.semigroup);
    return kOk;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw Error("cannot write '" + c.out_path + "'");
  write_table(file, inst.semigroup);
  print_header(out, inst);
  out << "name=" << inst.semigroup.name() << '\n';
  out << "out=" << c.out_path << '\n';
  return kOk;
}

// --- rank ------------------------------------------------------------------

struct RankFlags {
  bool r1 = false, r2 = false, r3 = false, r4 = false, r5 = false, all = false, oracle = false;
};

int cmd_rank(CommonArgs const& c, RankFlags f, std::ostream& out) {
  auto const start = Clock::now();
  auto const inst = load_input(c);
  auto const& s = inst.semigroup;
  if (f.all) f.r1 = f.r2 = f.r3 = f.r4 = f.r5 = true;
  if (!(f.r1 || f.r2 || f.r3 || f.r4 || f.r5)) f.r5 = true;
  auto const guards = guards_of(c);

  print_header(out, inst);
  RankReport rep;
  struct Row {
    std::string rank;
    std::size_t value;
    std::string method;
    std::string witness;
  };
  std::vector<Row> rows;
  auto const witness_text = [&](std::optional<SubsetMask> const& w) {
    return w ? format_subset(s, *w) : std::string("-");
  };

  if (f.r1) {
    auto r = small_rank(s, guards);
    rep.r1 = r.value;
    out << "r1=" << r.value << '\n';
    out << "r1_certificate=" << witness_text(r.witness) << '\n';
    rows.push_back({"r1", r.value, "search", witness_text(r.witness)});
  }
  if (f.r2) {
    auto r = lower_rank(s, guards);
    rep.r2 = r.value;
    out << "r2=" << r.value << '\n';
    out << "r2_witness=" << witness_text(r.witness) << '\n';
    rows.push_back({"r2", r.value, "search", witness_text(r.witness)});
  }
  if (f.r3) {
    auto r = intermediate_rank(s, guards);
    rep.r3 = r.value;
    out << "r3=" << r.value << '\n';
    out << "r3_witness=" << witness_text(r.witness) << '\n';
    rows.push_back({"r3", r.value, "search", witness_text(r.witness)});
  }
  if (f.r4) {
    auto r = upper_rank(s, guards);
    rep.r4 = r.value;
    out << "r4=" << r.value << '\n';
    out << "r4_witness=" << witness_text(r.witness) << '\n';
    rows.push_back({"r4", r.value, "search", witness_text(r.witness)});
  }
  bool mismatch = false;
  if (f.r5) {
    auto r = large_rank(s, search_of(c));
    rep.r5 = r.value;
    out << "r5=" << r.value << '\n';
    out << "r5_method=" << to_string(r.method) << '\n';
    out << "r5_prime_subset=" << witness_text(r.prime_subset) << '\n';
    out << "r5_subsemigroup=" << witness_text(r.largest_subsemigroup) << '\n';
    out << "r5_nodes=" << r.nodes_visited << '\n';
    rows.push_back({"r5", r.value, to_string(r.method), witness_text(r.prime_subset)});
    if (auto sc = large_rank_via_indecomposable(s)) {
      out << "r5_shortcut=" << *sc << '\n';
      mismatch |= *sc != r.value;
    }
    if (f.oracle) {
      auto const direct = large_rank_direct(s, guards);
      out << "r5_direct=" << direct << '\n';
      out << "r5_oracle=" << (direct == r.value ? "MATCH" : "MISMATCH") << '\n';
      rows.push_back({"r5", direct, "direct", "-"});
      mismatch |= direct != r.value;
    }
  }
  if (f.all) out << "chain=" << (rep.chain_holds() ? "holds" : "VIOLATED") << '\n';
  mismatch |= !rep.chain_holds();
  print_elapsed(out, start);

  out << '\n' << "  rank  value  method    witness\n";
  for (auto const& row : rows) {
    out << "  " << std::left << std::setw(6) << row.rank << std::setw(7) << row.value
        << std::setw(10) << row.method << row.witness << '\n';
  }
  out << std::right;
  return mismatch ? kMismatch : kOk;
}

// --- prime / oracle / info ---------------------------------------------------

int cmd_prime(CommonArgs const& c, bool lower_bound, std::ostream& out) {
  auto const start = Clock::now();
  auto const inst = load_input(c);
  auto const& s = inst.semigroup;
  auto opts = search_of(c);
  opts.matching_lower_bound = lower_bound;
  auto const r = smallest_proper_prime_subset(s, opts);
  print_header(out, inst);
  out << "prime_size=" << r.size << '\n';
  out << "prime_subset=" << format_subset(s, r.witness) << '\n';
  auto const sub = r.witness.complement();
  out << "subsemigroup_size=" << sub.count() << '\n';
  out << "subsemigroup=" << format_subset(s, sub) << '\n';
  out << "r5=" << s.order() - r.size + 1 << '\n';
  out << "proven_optimal=" << (r.proven_optimal ? "yes" : "no") << '\n';
  out << "nodes=" << r.nodes_visited << '\n';
  print_elapsed(out, start);
  return kOk;
}

int cmd_oracle(CommonArgs const& c, std::ostream& out) {
  auto const start = Clock::now();
  auto const inst = load_input(c);
  RankGuards g = guards_of(c);
  auto const direct = large_rank_direct(inst.semigroup, g);
  print_header(out, inst);
  out << "r5_direct=" << direct << '\n';
  print_elapsed(out, start);
  return kOk;
}

int cmd_info(CommonArgs const& c, std::ostream& out) {
  auto const inst = load_input(c);
  auto const& s = inst.semigroup;
  print_header(out, inst);
  out << "name=" << s.name() << '\n';
  auto const idem = idempotents(s);
  auto const indec = indecomposable_elements(s);
  out << "idempotents=" << idem.count() << '\n';
  out << "idempotent_elements=" << format_subset(s, idem) << '\n';
  out << "indecomposables=" << indec.count() << '\n';
  out << "indecomposable_elements=" << format_subset(s, indec) << '\n';
  return kOk;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::string groups = "Z1,Z2,Z3,S3";
  std::string n_range;
};

std::string match(bool ok) { return ok ? "MATCH" : "MISMATCH"; }

int verify_brandt(VerifyArgs const& v, CommonArgs const& c, std::ostream& out) {
  auto const range = parse_range(v.n_range.empty() ? "2..3" : v.n_range);
  std::size_t mismatches = 0, instances = 0;
  for (auto const& gname : split_list(v.groups)) {
    auto const g = group_by_name(gname);
    for (auto n = range.lo; n <= range.hi; ++n) {
      auto const b = brandt(g, n);
      auto const search = large_rank(b.semigroup, search_of(c)).value;
      auto const formula = closed_form(ClosedForm::brandt_large_rank, n, g.order());
      bool const prime = is_prime_subset(b.semigroup, witness_prime_brandt(b));
      bool const ok = search == formula && prime;
      mismatches += !ok;
      ++instances;
      out << "brandt group=" << gname << " n=" << n << " m=" << b.semigroup.order()
          << " search=" << search << " formula=" << formula
          << " witness=" << (prime ? "prime" : "NOT-PRIME") << ' ' << match(ok) << '\n';
    }
  }
  out << "summary suite=brandt instances=" << instances << " mismatches=" << mismatches << '\n';
  return mismatches == 0 ? kOk : kMismatch;
}

int verify_on(VerifyArgs const& v, CommonArgs const& c, std::ostream& out) {
  auto const range = parse_range(v.n_range.empty() ? "3..5" : v.n_range);
  auto const guards = guards_of(c);
  std::size_t mismatches = 0, instances = 0;
  for (auto n = range.lo; n <= range.hi; ++n) {
    auto const on = order_preserving_singular(n);
    auto const& s = on.semigroup;
    auto const search = large_rank(s, search_of(c)).value;
    auto const formula = closed_form(ClosedForm::order_preserving_large_rank, n);
    bool ok = search == formula;
    out << "on n=" << n << " m=" << s.order() << " search=" << search << " formula=" << formula;
    if (n >= 3) {
      bool prime = true;
      for (std::size_t q = 1; q <= n; ++q) prime &= is_prime_subset(s, witness_prime_on(on, q));
      ok &= prime;
      out << " witness=" << (prime ? "prime" : "NOT-PRIME");
    }
    if (s.order() <= guards.direct_order) {
      auto const direct = large_rank_direct(s, guards);
      ok &= direct == formula;
      out << " direct=" << direct;
    }
    out << ' ' << match(ok) << '\n';
    mismatches += !ok;
    ++instances;
  }
  out << "summary suite=on instances=" << instances << " mismatches=" << mismatches << '\n';
  return mismatches == 0 ? kOk : kMismatch;
}

// Params plus the order, without repeating m= for families sized by it.
std::string instance_params(NamedSemigroup const& inst) {
  if (inst.params.rfind("m=", 0) == 0) return inst.params;
  return inst.params + " m=" + std::to_string(inst.semigroup.order());
}

std::vector<NamedSemigroup> verify_targets(CommonArgs const& c, std::size_t max_order) {
  if (!c.fam.family.empty() || !c.table_path.empty()) return {load_input(c)};
  std::vector<NamedSemigroup> out;
  for (auto& named : small_corpus()) {
    if (named.semigroup.order() <= max_order) out.push_back(std::move(named));
  }
  return out;
}

int verify_chain(CommonArgs const& c, std::ostream& out) {
  auto const guards = guards_of(c);
  std::size_t mismatches = 0, instances = 0;
  for (auto const& inst : verify_targets(c, 10)) {
    auto const rep = rank_chain_check(inst.semigroup, guards, search_of(c));
    bool const ok = rep.chain_holds() && rep.notes.empty();
    out << "chain family=" << inst.family << ' ' << instance_params(inst) << " r1=" << *rep.r1 << " r2=" << *rep.r2
        << " r3=" << *rep.r3 << " r4=" << *rep.r4 << " r5=" << *rep.r5 << ' ' << match(ok)
        << '\n';
    mismatches += !ok;
    ++instances;
  }
  out << "summary suite=chain instances=" << instances << " mismatches=" << mismatches << '\n';
  return mismatches == 0 ? kOk : kMismatch;
}

int verify_duality(CommonArgs const& c, std::ostream& out) {
  std::size_t mismatches = 0, instances = 0;
  for (auto const& inst : verify_targets(c, 10)) {
    auto const& s = inst.semigroup;
    auto const m = s.order();
    if (m >= 63 || (std::uint64_t{1} << m) > c.guard_subsets) {
      throw GuardExceeded("subset-candidates", m >= 63 ? UINT64_MAX : std::uint64_t{1} << m,
                          c.guard_subsets);
    }
    std::uint64_t violations = 0;
    std::uint64_t const total = std::uint64_t{1} << m;
    for (std::uint64_t bits = 1; bits + 1 < total; ++bits) {
      SubsetMask u(m);
      for (ElementId x = 0; x < m; ++x) {
        if ((bits >> x) & 1U) u.insert(x);
      }
      violations += is_prime_subset(s, u) != is_subsemigroup(s, u.complement());
    }
    bool const ok = violations == 0;
    out << "duality family=" << inst.family << ' ' << instance_params(inst)
        << " subsets=" << total << " violations=" << violations << ' ' << match(ok) << '\n';
    mismatches += !ok;
    ++instances;
  }
  out << "summary suite=duality instances=" << instances << " mismatches=" << mismatches
      << '\n';
  return mismatches == 0 ? kOk : kMismatch;
}

int cmd_verify(VerifyArgs const& v, CommonArgs const& c, std::ostream& out) {
  auto const start = Clock::now();
  int code = kOk;
  if (v.suite == "brandt") {
    code = verify_brandt(v, c, out);
  } else if (v.suite == "on") {
    code = verify_on(v, c, out);
  } else if (v.suite == "chain") {
    code = verify_chain(c, out);
  } else if (v.suite == "duality") {
    code = verify_duality(c, out);
  } else {
    throw ParameterError("unknown suite '" + v.suite + "' (brandt, on, chain, duality)");
  }
  print_elapsed(out, start);
  return code;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"semirank: exact ranks of finite semigroups via prime subsets", "semirank"};
  app.require_subcommand(1);

  CommonArgs common;
  FamilyArgs build_family_args;
  RankFlags rank_flags;
  VerifyArgs verify_args;
  bool lower_bound = false;

  auto* build = app.add_subcommand("build", "Write the Cayley table of a family");
  build->add_option("family", build_family_args.family, "Family name")->required();
  add_family_options(build, build_family_args, false);
  add_common_options(build, common);

  auto* rank = app.add_subcommand("rank", "Compute ranks r1..r5");
  auto* prime = app.add_subcommand("prime", "Smallest prime subset and largest subsemigroup");
  auto* oracle = app.add_subcommand("oracle", "Large rank straight from its definition");
  auto* info = app.add_subcommand("info", "Order, idempotents, indecomposable elements");
  for (auto* cmd : {rank, prime, oracle, info}) {
    cmd->add_option("table", common.table_path, "Cayley table file");
    add_family_options(cmd, common.fam, true);
    add_common_options(cmd, common);
  }
  rank->add_flag("--r1", rank_flags.r1, "Small rank");
  rank->add_flag("--r2", rank_flags.r2, "Lower rank");
  rank->add_flag("--r3", rank_flags.r3, "Intermediate rank");
  rank->add_flag("--r4", rank_flags.r4, "Upper rank");
  rank->add_flag("--r5", rank_flags.r5, "Large rank");
  rank->add_flag("--all", rank_flags.all, "All five ranks and the chain check");
  rank->add_flag("--oracle", rank_flags.oracle, "Cross-check r5 against its definition");
  prime->add_flag("--lower-bound", lower_bound, "Prune with the disjoint-factorization bound");

  auto* verify = app.add_subcommand("verify", "Run a reproduction suite");
  verify->add_option("suite", verify_args.suite, "brandt | on | chain | duality")->required();
  verify->add_option("--groups", verify_args.groups, "Comma-separated groups for brandt");
  verify->add_option("--range", verify_args.n_range, "n range, e.g. 2..4");
  verify->add_option("table", common.table_path, "Cayley table file (chain, duality)");
  verify->add_option("--family", common.fam.family, "Family (chain, duality)");
  verify->add_option("--group", common.fam.group);
  verify->add_option("--index", common.fam.index);
  verify->add_option("--period", common.fam.period);
  verify->add_option("--m", common.fam.m);
  // --n is a range for brandt/on and a single value for chain/duality families.
  std::string n_text;
  verify->add_option("--n", n_text, "n or n range");
  add_common_options(verify, common);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (CLI::ParseError const& e) {
    auto const code = app.exit(e, out, err);
    return code == 0 ? kOk : kFailure;
  }

  try {
    if (build->parsed()) return cmd_build(build_family_args, common, out);
    if (rank->parsed()) return cmd_rank(common, rank_flags, out);
    if (prime->parsed()) return cmd_prime(common, lower_bound, out);
    if (oracle->parsed()) return cmd_oracle(common, out);
    if (info->parsed()) return cmd_info(common, out);
    if (verify->parsed()) {
      if (!n_text.empty()) {
        if (verify_args.suite == "brandt" || verify_args.suite == "on") {
          if (verify_args.n_range.empty()) verify_args.n_range = n_text;
        } else {
          auto const r = parse_range(n_text);
          if (r.lo != r.hi) throw ParameterError("--n must be a single value for this suite");
          common.fam.n = r.lo;
        }
      }
      return cmd_verify(verify_args, common, out);
    }
  } catch (TableError const& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (GuardExceeded const& e) {
    err << "error: " << e.what() << '\n';
    return kGuardExceeded;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace semirank::cli
