#include "fecount/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "fecount/errors.hpp"
#include "fecount/feedback.hpp"
#include "fecount/monoid.hpp"
#include "fecount/nu.hpp"
#include "fecount/oracle.hpp"
#include "fecount/partition.hpp"
#include "fecount/verify.hpp"

namespace fecount::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One emitted result: the query, its exact value and where it came from.
struct OutputRecord {
  std::string operation;
  json params = json::object();
  std::string result;
  Provenance provenance = Provenance::PaperFormula;
};

json to_json(const OutputRecord& r) {
  json j;
  j["operation"] = r.operation;
  for (const auto& [key, value] : r.params.items()) j[key] = value;
  j["result"] = r.result;
  j["provenance"] = std::string(to_string(r.provenance));
  return j;
}

std::string plain(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void emit_record(const OutputRecord& r, const std::string& format, std::ostream& out) {
  const json j = to_json(r);
  if (format == "json") {
    out << json::array({j}).dump() << '\n';
  } else if (format == "csv") {
    std::string header, row;
    for (const auto& [key, value] : j.items()) {
      if (!header.empty()) {
        header += ',';
        row += ',';
      }
      header += key;
      row += csv_field(plain(value));
    }
    out << header << '\n' << row << '\n';
  } else {
    out << r.operation;
    for (const auto& [key, value] : r.params.items()) out << ' ' << key << '=' << plain(value);
    out << " result=" << r.result << " provenance=" << to_string(r.provenance) << '\n';
  }
}

/// Options naming a ring, shared by several commands.
struct RingArgs {
  std::string ring = "trivial";
  std::optional<std::uint64_t> pic_cyclic;
  std::string pic_group;
  bool pic_infinite = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--ring", ring,
                    "trivial | dedekind | zmod(l) | dedekind(2x3) | product(trivial,...)");
    auto* cyc = cmd->add_option("--pic-cyclic", pic_cyclic, "Picard group Z/m");
    auto* grp = cmd->add_option("--pic-group", pic_group, "Picard group m1xm2x...");
    auto* inf = cmd->add_flag("--pic-infinite", pic_infinite, "infinite Picard group");
    cyc->excludes(grp)->excludes(inf);
    grp->excludes(inf);
  }

  RingSpec build() const {
    const bool has_pic = pic_cyclic.has_value() || !pic_group.empty() || pic_infinite;
    if (ring == "dedekind") {
      if (!has_pic)
        throw UsageError("--ring dedekind needs --pic-cyclic, --pic-group or --pic-infinite");
      if (pic_infinite) return RingSpec::dedekind(PicardSpec::infinite());
      if (pic_cyclic) {
        if (*pic_cyclic == 0) throw UsageError("--pic-cyclic must be >= 1");
        return RingSpec::dedekind(PicardSpec::finite(FiniteAbelianGroup::cyclic(*pic_cyclic)));
      }
      return RingSpec::dedekind(PicardSpec::finite(parse_group(pic_group)));
    }
    if (has_pic) throw UsageError("Picard options apply only to --ring dedekind");
    if (ring == "product")
      throw UsageError("give the factors, e.g. --ring 'product(trivial,dedekind(2))'");
    return parse_ring_spec(ring);
  }
};

/// Options naming the state space.
struct StateArgs {
  std::uint64_t rank = 0;
  bool free = false;
  bool nonfree = false;
  std::string det;

  void attach(CLI::App* cmd, bool rank_required = true) {
    auto* r = cmd->add_option("--rank", rank, "rank n of the state space");
    if (rank_required) r->required();
    auto* f = cmd->add_flag("--free", free, "state space R^n");
    auto* nf = cmd->add_flag("--nonfree", nonfree, "state space R^(n-1) + L, L nontrivial");
    auto* d = cmd->add_option("--det", det, "determinant residues of the state space, e.g. 1,0");
    f->excludes(nf)->excludes(d);
    nf->excludes(d);
  }

  StateSpace build(const RingSpec& ring, std::uint64_t n, bool default_free) const {
    if (free) return StateSpace::free(n);
    if (nonfree) return StateSpace::nonfree(n);
    if (det.empty()) return default_free ? StateSpace::free(n) : StateSpace::any_of_rank(n);
    if (ring.kind() != RingSpec::Kind::Dedekind || ring.picard().is_infinite())
      throw IncompatibleSpec("--det needs a Dedekind ring with a finite Picard group");
    if (n == 0) throw UsageError("--det needs rank >= 1");
    return StateSpace::of(ModuleClass::make(n, parse_element(det, *ring.picard().group)));
  }

  std::string describe() const {
    if (free) return "free";
    if (nonfree) return "nonfree";
    if (!det.empty()) return "module(" + det + ")";
    return "any";
  }
};

FeResult fe_by_oracle(const RingSpec& ring, const StateSpace& state, const ResourceLimits& limits) {
  const auto n = static_cast<std::uint32_t>(state.rank);
  auto result = [](BigCount c) { return FeResult{std::move(c), Provenance::Oracle}; };
  switch (ring.kind()) {
    case RingSpec::Kind::ProjectivelyTrivial:
      if (state.kind == StateSpace::Kind::AnyOfRank || state.kind == StateSpace::Kind::Free)
        return result(oracle_count_rank(n, limits));
      break;
    case RingSpec::Kind::Product: {
      bool all_trivial = true;
      for (const auto& f : ring.factors())
        all_trivial = all_trivial && f.kind() == RingSpec::Kind::ProjectivelyTrivial;
      if (!all_trivial)
        throw IncompatibleSpec("the oracle handles products of projectively trivial rings only");
      if (state.kind == StateSpace::Kind::AnyOfRank || state.kind == StateSpace::Kind::Free)
        return result(oracle_count_product(n, static_cast<std::uint32_t>(ring.factors().size()),
                                           limits));
      break;
    }
    case RingSpec::Kind::Dedekind: {
      if (ring.picard().is_infinite())
        throw IncompatibleSpec("the oracle needs a finite Picard group");
      const auto& g = *ring.picard().group;
      if (state.kind == StateSpace::Kind::AnyOfRank)
        return result(oracle_count_dedekind_rank(n, g, limits));
      if (state.kind == StateSpace::Kind::Free)
        return result(oracle_count_dedekind(ModuleClass::free_module(n, g), g, limits));
      if (state.kind == StateSpace::Kind::Module)
        return result(oracle_count_dedekind(*state.module, g, limits));
      throw IncompatibleSpec("the oracle needs an explicit determinant; pass --det");
    }
  }
  throw IncompatibleSpec("that state space does not exist over " + ring.to_string());
}

std::vector<std::uint64_t> parse_sizes(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad size '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("--sizes needs at least one size");
  return out;
}

/// Writes to `path`, or to `out` when the path is empty or "-".
void with_output(const std::string& path, std::ostream& out,
                 const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(out);
    return;
  }
  std::ostringstream buffer;
  body(buffer);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << buffer.str();
  if (!file.flush()) throw IoError("failed writing '" + path + "'");
}

std::string multiplicities(const std::vector<std::uint32_t>& z) {
  std::string s = "(";
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(z[i]);
  }
  return s + ')';
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of feedback classes of locally Brunovsky linear systems", "fecount"};
  app.require_subcommand(1);
  app.fallthrough();

  ResourceLimits limits;
  app.add_option("--ceiling", limits.max_n, "largest n accepted by counting tables");
  app.add_option("--oracle-budget", limits.max_oracle_work,
                 "largest number of candidate tuples an oracle may visit");

  const std::vector<std::string> formats{"text", "csv", "json"};

  // count
  auto* count = app.add_subcommand("count", "print one exact count");
  count->require_subcommand(1);
  count->fallthrough();
  std::string count_format = "text";
  count->add_option("--format", count_format)->check(CLI::IsMember(formats));

  auto* count_partitions_cmd = count->add_subcommand("partitions", "p(n)");
  std::uint64_t part_n = 0;
  count_partitions_cmd->add_option("n", part_n)->required();

  auto* count_nu = count->add_subcommand("nu", "nu(n,k), or nu(n,k,p) with --prime");
  std::uint64_t nu_n = 0, nu_k = 0;
  std::optional<std::uint64_t> nu_prime;
  bool nu_complement = false;
  count_nu->add_option("n", nu_n)->required();
  count_nu->add_option("k", nu_k)->required();
  count_nu->add_option("--prime", nu_prime, "restrict to sizes divisible by this prime");
  count_nu->add_flag("--complement", nu_complement, "nu(n,k) - nu(n,k,p)")
      ->needs(count_nu->get_option("--prime"));

  auto* count_fe = count->add_subcommand("fe", "number of feedback classes");
  RingArgs fe_ring;
  StateArgs fe_state;
  bool fe_oracle = false;
  fe_ring.attach(count_fe);
  fe_state.attach(count_fe);
  count_fe->add_flag("--oracle", fe_oracle, "count by exhaustive enumeration");

  auto* count_det = count->add_subcommand("det-solutions",
                                          "solutions of sum_s s*a_s = target in the Picard group");
  RingArgs det_ring;
  det_ring.ring = "dedekind";
  std::string det_sizes, det_target;
  det_ring.attach(count_det);
  count_det->add_option("--sizes", det_sizes, "distinct part sizes, e.g. 1,2")->required();
  count_det->add_option("--det", det_target, "target residues")->required();

  // table
  auto* table = app.add_subcommand("table", "emit a table of counts");
  table->require_subcommand(1);
  table->fallthrough();
  std::string table_format = "csv", table_output;
  std::uint64_t table_max_n = 0;
  table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--output,-o", table_output, "output path (default stdout)");
  table->add_option("--max-n", table_max_n)->required();
  auto* table_nu = table->add_subcommand("nu", "the nu(n,k) triangle");
  auto* table_fe = table->add_subcommand("fe", "feedback class counts for n = 1..max-n");
  RingArgs table_ring;
  StateArgs table_state;
  table_ring.attach(table_fe);
  table_state.attach(table_fe, false);

  // list
  auto* list = app.add_subcommand("list", "list partitions or solution tuples");
  list->require_subcommand(1);
  list->fallthrough();
  std::optional<std::uint64_t> list_limit;
  list->add_option("--limit", list_limit, "stop after this many lines");
  auto* list_partitions = list->add_subcommand("partitions", "partitions of n, canonical order");
  std::uint32_t list_n = 0;
  std::optional<std::uint32_t> list_distinct;
  list_partitions->add_option("n", list_n)->required();
  list_partitions->add_option("--distinct-sizes", list_distinct, "keep only this many sizes");
  auto* list_solutions = list->add_subcommand("solutions", "solution tuples (Z_1, ..., Z_n)");
  RingArgs list_ring;
  StateArgs list_state;
  list_ring.attach(list_solutions);
  list_state.attach(list_solutions);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run identity and oracle suites");
  std::vector<std::string> suites{"all"};
  verify::SuiteOptions suite_options;
  std::vector<std::string> group_texts;
  verify_cmd->add_option("--suite", suites, "suite names or 'all'")->delimiter(',');
  verify_cmd->add_option("--max-n", suite_options.max_n);
  verify_cmd->add_option("--primes", suite_options.primes)->delimiter(',');
  verify_cmd->add_option("--groups", group_texts, "Picard groups, e.g. 2,3,2x2")->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  }

  if (count->parsed()) {
    OutputRecord rec;
    if (count_partitions_cmd->parsed()) {
      rec.operation = "partitions";
      rec.params["n"] = part_n;
      rec.result = count_partitions(part_n, limits).to_string();
    } else if (count_nu->parsed()) {
      rec.operation = nu_complement ? "nu-complement" : nu_prime ? "nu-p" : "nu";
      rec.params["n"] = nu_n;
      rec.params["k"] = nu_k;
      if (nu_prime) rec.params["p"] = *nu_prime;
      if (nu_n < 1 || nu_k < 1) throw UsageError("nu needs n >= 1 and k >= 1");
      const BigCount v = !nu_prime       ? nu(nu_n, nu_k, limits)
                         : nu_complement ? nu_prime_complement(nu_n, nu_k, *nu_prime, limits)
                                         : nu_p(nu_n, nu_k, *nu_prime, limits);
      rec.result = v.to_string();
    } else if (count_fe->parsed()) {
      const RingSpec ring = fe_ring.build();
      const StateSpace state = fe_state.build(ring, fe_state.rank, false);
      rec.operation = "fe";
      rec.params["ring"] = ring.to_string();
      rec.params["state"] = fe_state.describe();
      rec.params["rank"] = fe_state.rank;
      const FeResult r = fe_oracle ? fe_by_oracle(ring, state, limits)
                                   : fe_dispatch(ring, state, limits);
      rec.result = r.count.to_string();
      rec.provenance = r.provenance;
    } else {
      const RingSpec ring = det_ring.build();
      if (ring.kind() != RingSpec::Kind::Dedekind || ring.picard().is_infinite())
        throw UsageError("det-solutions needs a finite Picard group");
      const auto& g = *ring.picard().group;
      rec.operation = "det-solutions";
      rec.params["group"] = g.to_string();
      rec.params["sizes"] = det_sizes;
      rec.params["det"] = det_target;
      rec.result = count_det_solutions(parse_sizes(det_sizes), parse_element(det_target, g), g)
                       .to_string();
      rec.provenance =
          is_prime(g.order()) || g.is_trivial() ? Provenance::PaperFormula
                                                : Provenance::ExtensionFormula;
    }
    emit_record(rec, count_format, out);
    return kOk;
  }

  if (table->parsed()) {
    if (table_max_n < 1) throw UsageError("--max-n must be >= 1");
    std::vector<OutputRecord> rows;
    if (table_nu->parsed()) {
      const NuTable t(table_max_n, limits);
      for (std::size_t n = 1; n <= table_max_n; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
          OutputRecord rec;
          rec.operation = "nu";
          rec.params["n"] = n;
          rec.params["k"] = k;
          rec.result = t.at(n, k).to_string();
          rows.push_back(std::move(rec));
        }
    } else {
      const RingSpec ring = table_ring.build();
      for (std::uint64_t n = 1; n <= table_max_n; ++n) {
        const FeResult r = fe_dispatch(ring, table_state.build(ring, n, false), limits);
        OutputRecord rec;
        rec.operation = "fe";
        rec.params["ring"] = ring.to_string();
        rec.params["state"] = table_state.describe();
        rec.params["n"] = n;
        rec.result = r.count.to_string();
        rec.provenance = r.provenance;
        rows.push_back(std::move(rec));
      }
    }
    const bool is_nu = table_nu->parsed();
    with_output(table_output, out, [&](std::ostream& os) {
      if (table_format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        os << arr.dump(2) << '\n';
        return;
      }
      os << (is_nu ? "n,k,nu\n" : "n,fe,provenance\n");
      for (const auto& r : rows) {
        if (is_nu)
          os << plain(r.params["n"]) << ',' << plain(r.params["k"]) << ',' << r.result << '\n';
        else
          os << plain(r.params["n"]) << ',' << r.result << ',' << to_string(r.provenance) << '\n';
      }
    });
    return kOk;
  }

  if (list->parsed()) {
    std::uint64_t emitted = 0;
    auto room = [&] { return !list_limit || emitted < *list_limit; };
    if (list_partitions->parsed()) {
      if (list_n > limits.max_n) throw ResourceError("n exceeds the ceiling");
      for (const auto& p : enumerate_partitions(list_n)) {
        if (!room()) break;
        if (list_distinct && distinct_sizes(p) != *list_distinct) continue;
        out << p.to_string() << '\n';
        ++emitted;
      }
      return kOk;
    }
    const RingSpec ring = list_ring.build();
    const auto n = static_cast<std::uint32_t>(list_state.rank);
    const StateSpace state = list_state.build(ring, n, true);
    switch (ring.kind()) {
      case RingSpec::Kind::ProjectivelyTrivial: {
        if (state.kind != StateSpace::Kind::Free)
          throw IncompatibleSpec("projectively trivial rings have only free state spaces");
        RankSolutionStream s(n, limits);
        while (room()) {
          auto z = s.next();
          if (!z) break;
          out << "z=" << multiplicities(*z) << '\n';
          ++emitted;
        }
        return kOk;
      }
      case RingSpec::Kind::Product: {
        for (const auto& f : ring.factors())
          if (f.kind() != RingSpec::Kind::ProjectivelyTrivial)
            throw IncompatibleSpec("listing supports products of projectively trivial rings only");
        if (state.kind != StateSpace::Kind::Free)
          throw IncompatibleSpec("product rings are supported only with a free state space R^n");
        ProductSolutionStream s(n, static_cast<std::uint32_t>(ring.factors().size()), limits);
        while (room()) {
          auto sol = s.next();
          if (!sol) break;
          for (std::size_t c = 0; c < sol->components.size(); ++c)
            out << (c ? " " : "") << 'z' << c + 1 << '=' << multiplicities(sol->components[c]);
          out << '\n';
          ++emitted;
        }
        return kOk;
      }
      case RingSpec::Kind::Dedekind: {
        if (ring.picard().is_infinite())
          throw IncompatibleSpec("cannot list solutions over an infinite Picard group");
        const auto& g = *ring.picard().group;
        ModuleClass x = ModuleClass::free_module(n, g);
        if (state.kind == StateSpace::Kind::Module) x = *state.module;
        if (state.kind == StateSpace::Kind::NonFree)
          throw IncompatibleSpec("pass the determinant of the state space with --det");
        DedekindSolutionStream s(x, g, limits);
        while (room()) {
          auto sol = s.next();
          if (!sol) break;
          for (std::size_t i = 0; i < sol->entries.size(); ++i)
            out << (i ? " " : "") << 'Z' << i + 1 << '=' << sol->entries[i].to_string();
          out << '\n';
          ++emitted;
        }
        return kOk;
      }
    }
    return kOk;
  }

  // verify
  for (const auto& text : group_texts) suite_options.groups.push_back(parse_group(text));
  suite_options.limits = limits;
  std::vector<std::string> selected;
  for (const auto& s : suites) {
    if (s == "all")
      selected.insert(selected.end(), verify::suite_names().begin(), verify::suite_names().end());
    else if (std::find(verify::suite_names().begin(), verify::suite_names().end(), s) ==
             verify::suite_names().end())
      throw UsageError("unknown suite '" + s + "'");
    else
      selected.push_back(s);
  }
  bool all_passed = true;
  for (const auto& name : selected) {
    const auto r = verify::run_suite(name, suite_options);
    if (r.passed) {
      out << "PASS " << r.name << " (" << r.checks << " checks, n<=" << suite_options.max_n
          << ")\n";
    } else {
      out << "FAIL " << r.name << ": " << r.counterexample << '\n';
      all_passed = false;
    }
  }
  (void)err;
  return all_passed ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_parsed(args, out, err);
  } catch (const CLI::ParseError& e) {
    err << "fecount: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "fecount: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "fecount: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "fecount: " << e.what() << '\n';
    return kDomain;
  } catch (const std::overflow_error& e) {
    err << "fecount: " << e.what() << '\n';
    return kDomain;
  } catch (const IoError& e) {
    err << "fecount: " << e.what() << '\n';
    return kIo;
  }
}

}  // namespace fecount::cli
