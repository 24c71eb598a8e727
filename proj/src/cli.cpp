#include "stacksort/cli.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "stacksort/constructions.hpp"
#include "stacksort/report_format.hpp"
#include "stacksort/stack_sort.hpp"
#include "stacksort/text.hpp"
#include "stacksort/verify.hpp"

namespace stacksort::cli {

std::string to_string(Command c) {
  switch (c) {
    case Command::sort: return "sort";
    case Command::trace: return "trace";
    case Command::stats: return "stats";
    case Command::characterize: return "characterize";
    case Command::preimage: return "preimage";
    case Command::lift: return "lift";
    case Command::zeta: return "zeta";
    case Command::xi: return "xi";
    case Command::bijection: return "bijection";
    case Command::count_image: return "count-image";
    case Command::verify: return "verify";
    case Command::explore: return "explore";
  }
  return "unknown";
}

EnumerationOptions CommandPlan::enumeration() const {
  EnumerationOptions o;
  o.shards = shards;
  o.max_n = max_n;
  o.memory_cap = memory_cap;
  return o;
}

namespace {

struct Bindings {
  std::string format = "plain";
  std::string perm_text;
  std::string claim;
  std::optional<std::size_t> iterations, t, n, m, l, n_max, max_n;
  std::size_t shards = 1;
  std::size_t memory_cap = 0;
  bool compact = false, keep_elements = false, timing = false;
};

struct Subcommands {
  CLI::App* sort;
  CLI::App* trace;
  CLI::App* stats;
  CLI::App* characterize;
  CLI::App* preimage;
  CLI::App* lift;
  CLI::App* zeta;
  CLI::App* xi;
  CLI::App* bijection;
  CLI::App* count_image;
  CLI::App* verify;
  CLI::App* explore;
};

Subcommands build_app(CLI::App& app, Bindings& b) {
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", b.format, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "jsonl"}));
  app.add_flag("--compact", b.compact, "Print permutations of length <= 9 as digit strings");
  app.add_option("--max-n", b.max_n, "Enumeration bound (default 10, hard cap 12; env STACKSORT_MAX_N)");
  app.add_option("--shards", b.shards, "Worker threads for enumeration (0 = all cores)");
  app.add_flag("--keep-elements", b.keep_elements, "List the elements of computed images");
  app.add_option("--memory-cap", b.memory_cap,
                 "Distinct codes per worker before spilling sorted runs to disk (count-only)");
  app.add_flag("--timing", b.timing, "Include wall time in image reports");

  auto perm_arg = [&](CLI::App* sub) {
    sub->add_option("permutation", b.perm_text, "e.g. 4162 or \"4 1 6 2\"")->required();
  };

  Subcommands s{};
  s.sort = app.add_subcommand("sort", "Apply the stack-sorting map");
  perm_arg(s.sort);
  s.sort->add_option("--iterations,--t", b.iterations, "Number of passes (default 1)");

  s.trace = app.add_subcommand("trace", "Push/pop events of one stack-sorting pass");
  perm_arg(s.trace);

  s.stats = app.add_subcommand("stats", "Descents, left-to-right maxima, tail length, pattern witness");
  perm_arg(s.stats);

  s.characterize = app.add_subcommand("characterize", "Decide membership in s^t(S_n)");
  perm_arg(s.characterize);
  s.characterize->add_option("--t", b.t, "Number of passes")->required();

  s.preimage = app.add_subcommand("preimage", "Canonical 32-bar-4-1-avoiding preimage");
  perm_arg(s.preimage);

  s.lift = app.add_subcommand("lift", "Avoiding sigma with s^t(sigma) = pi");
  perm_arg(s.lift);
  s.lift->add_option("--t", b.t, "Passes to lift (default: tail length)");

  s.zeta = app.add_subcommand("zeta", "Exceptional permutation zeta(l, m)");
  s.zeta->add_option("--l", b.l)->required();
  s.zeta->add_option("--m", b.m)->required();

  s.xi = app.add_subcommand("xi", "Preimage xi(l, m) of zeta(l, m) under s^(m-3)");
  s.xi->add_option("--l", b.l)->required();
  s.xi->add_option("--m", b.m)->required();

  s.bijection = app.add_subcommand("bijection", "Avoider <-> set partition");
  s.bijection->add_option("value", b.perm_text, "a permutation, or a partition like {2}{1,3}{4}")
      ->required();

  s.count_image = app.add_subcommand("count-image", "|s^t(S_n)| by brute force");
  s.count_image->add_option("--n", b.n)->required();
  s.count_image->add_option("--t", b.t)->required();

  s.verify = app.add_subcommand("verify", "Check a claim against brute force");
  s.verify
      ->add_option("claim", b.claim,
                   "theorem1 | theorem2 | prop2 | thm3_count | catalan | west_zeilberger | all")
      ->required()
      ->check(CLI::IsMember(
          {"theorem1", "theorem2", "prop2", "thm3_count", "catalan", "west_zeilberger", "all"}));
  s.verify->add_option("--m", b.m);
  s.verify->add_option("--n", b.n);
  s.verify->add_option("--n-max", b.n_max);

  s.explore = app.add_subcommand("explore", "|s^(n-m)(S_n)| for m <= n <= 2m-2");
  s.explore->add_option("--m", b.m)->required();
  return s;
}

std::size_t parse_env_max_n(const std::string& text) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("STACKSORT_MAX_N is not a nonnegative integer: '" + text + "'");
  }
  return v;
}

void require(const std::optional<std::size_t>& v, const std::string& flag, const std::string& claim) {
  if (!v) throw UsageError("verify " + claim + " requires " + flag);
}

}  // namespace

CommandPlan parse_args(std::span<const std::string> args, std::optional<std::string> env_max_n) {
  CLI::App app{"Stack-sorting map, highly sorted permutations and Bell numbers", "stacksort"};
  Bindings b;
  const Subcommands s = build_app(app, b);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    std::string help = app.help();
    for (auto* sub : app.get_subcommands()) help = sub->help();
    throw HelpRequested(help);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CommandPlan plan;
  plan.compact = b.compact;
  plan.keep_elements = b.keep_elements;
  plan.timing = b.timing;
  plan.shards = b.shards;
  plan.memory_cap = b.memory_cap;
  plan.format = b.format == "csv"     ? OutputFormat::csv
                : b.format == "jsonl" ? OutputFormat::jsonl
                                      : OutputFormat::plain;
  if (b.max_n) {
    plan.max_n = *b.max_n;
  } else if (env_max_n) {
    plan.max_n = parse_env_max_n(*env_max_n);
  }
  plan.t = b.t;
  plan.n = b.n;
  plan.m = b.m;
  plan.l = b.l;
  plan.n_max = b.n_max;
  plan.claim = b.claim;

  const std::pair<CLI::App*, Command> table[] = {
      {s.sort, Command::sort},           {s.trace, Command::trace},
      {s.stats, Command::stats},         {s.characterize, Command::characterize},
      {s.preimage, Command::preimage},   {s.lift, Command::lift},
      {s.zeta, Command::zeta},           {s.xi, Command::xi},
      {s.bijection, Command::bijection}, {s.count_image, Command::count_image},
      {s.verify, Command::verify},       {s.explore, Command::explore}};
  for (const auto& [sub, cmd] : table) {
    if (sub->parsed()) plan.command = cmd;
  }

  switch (plan.command) {
    case Command::sort:
      plan.iterations = b.iterations.value_or(1);
      [[fallthrough]];
    case Command::trace:
    case Command::stats:
    case Command::characterize:
    case Command::preimage:
    case Command::lift:
      plan.permutation = parse_permutation(b.perm_text);
      break;
    case Command::bijection: {
      const auto first = b.perm_text.find_first_not_of(" \t");
      if (first != std::string::npos && b.perm_text[first] == '{') {
        plan.partition = parse_partition(b.perm_text);
      } else {
        plan.permutation = parse_permutation(b.perm_text);
      }
      break;
    }
    case Command::verify:
      if (plan.claim == "theorem1") {
        require(plan.m, "--m", plan.claim);
        require(plan.n, "--n", plan.claim);
      } else if (plan.claim == "theorem2") {
        require(plan.m, "--m", plan.claim);
      } else if (plan.claim == "prop2") {
        require(plan.m, "--m", plan.claim);
        require(plan.n_max, "--n-max", plan.claim);
      } else if (plan.claim != "all") {
        require(plan.n, "--n", plan.claim);
      }
      break;
    default:
      break;
  }
  return plan;
}

namespace {

void emit(std::ostream& out, OutputFormat format, const std::vector<Record>& rows) {
  if (format == OutputFormat::csv) {
    write_csv(out, rows);
  } else {
    write_jsonl(out, rows);
  }
}

std::string certificate_perm(const Permutation& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

void warn_if_large(std::size_t n, std::ostream& err) {
  if (n > kDefaultMaxN) {
    err << "warning: n = " << n << " enumerates " << factorial(n).str() << " permutations\n";
  }
}

std::string plain_verification_line(const VerificationReport& r) {
  std::ostringstream line;
  line << (r.pass ? "PASS " : "FAIL ") << to_string(r.claim);
  for (const auto& [k, v] : r.parameters) line << ' ' << k << '=' << v;
  line << " expected=" << r.expected.str() << " observed=" << r.observed.str();
  if (r.mismatches > 0 || !r.series.empty()) line << " (" << r.detail << ')';
  return line.str();
}

}  // namespace

int execute(const CommandPlan& plan, std::ostream& out, std::ostream& err) {
  const bool plain = plan.format == OutputFormat::plain;
  const auto fmt = [&](const Permutation& p) { return format_permutation(p, plan.compact); };

  switch (plan.command) {
    case Command::sort: {
      const auto result = stack_sort_iterate_counted(*plan.permutation, plan.iterations);
      if (plain) {
        out << fmt(result.result) << '\n';
      } else {
        Record r;
        r["input"] = fmt(*plan.permutation);
        r["iterations"] = plan.iterations;
        r["applied"] = result.applications;
        r["output"] = fmt(result.result);
        emit(out, plan.format, {r});
      }
      return kExitOk;
    }
    case Command::trace: {
      const auto trace = trace_stack_sort(*plan.permutation);
      if (plain) {
        out << format_trace(trace, plan.compact);
      } else {
        std::vector<Record> rows;
        for (const auto& ev : trace.events) {
          Record r;
          r["event"] = ev.kind == StackEvent::Kind::push ? "push" : "pop";
          r["value"] = ev.value;
          rows.push_back(std::move(r));
        }
        Record last;
        last["event"] = "output";
        last["value"] = fmt(trace.output);
        rows.push_back(std::move(last));
        emit(out, plan.format, rows);
      }
      return kExitOk;
    }
    case Command::stats: {
      const Permutation& p = *plan.permutation;
      Record r;
      r["permutation"] = fmt(p);
      r["length"] = p.size();
      r["standard"] = p.is_standard();
      r["standardization"] = fmt(standardize(p));
      std::string ds = "{";
      for (auto d : descents(p)) ds += (ds.size() > 1 ? "," : "") + std::to_string(d);
      r["descents"] = ds + "}";
      r["descent_tops"] = format_entry_set(descent_tops(p));
      r["lr_maxima"] = format_entry_set(lr_maxima(p));
      r["tail_length"] = p.is_standard() ? Record(tail_length(p)) : Record(nullptr);
      const auto w = find_barred_3241(p);
      r["avoids_32-4-1"] = !w.has_value();
      if (w) {
        r["witness_positions"] = w->positions;
        r["witness_values"] = w->values;
      } else {
        r["witness_positions"] = nullptr;
        r["witness_values"] = nullptr;
      }
      if (plain) {
        for (const auto& [k, v] : r.items()) {
          out << k << ' ';
          if (v.is_string()) {
            out << v.get<std::string>();
          } else if (v.is_null()) {
            out << "n/a";
          } else {
            out << v.dump();
          }
          out << '\n';
        }
      } else {
        emit(out, plan.format, {r});
      }
      return kExitOk;
    }
    case Command::characterize: {
      const auto result = characterize_membership(*plan.permutation, *plan.t, plan.enumeration());
      if (plain) {
        out << (result.member ? "true" : "false") << ' ' << to_string(result.rule) << '\n';
      } else {
        Record r;
        r["permutation"] = fmt(*plan.permutation);
        r["t"] = *plan.t;
        r["member"] = result.member;
        r["rule"] = to_string(result.rule);
        emit(out, plan.format, {r});
      }
      return kExitOk;
    }
    case Command::preimage: {
      const Permutation& p = *plan.permutation;
      const Permutation sigma = lemma1_preimage(p);
      const Permutation image = stack_sort(sigma);
      const bool avoids = avoids_barred_3241(sigma);
      if (plain) {
        out << fmt(sigma) << '\n';
        out << "certificate s(sigma)=" << certificate_perm(image)
            << " avoids=" << (avoids ? "true" : "false")
            << " lrmax_sigma=" << format_entry_set(lr_maxima(sigma))
            << " lrmax_pi=" << format_entry_set(lr_maxima(p)) << '\n';
      } else {
        Record r;
        r["pi"] = fmt(p);
        r["sigma"] = fmt(sigma);
        r["s_sigma"] = fmt(image);
        r["avoids"] = avoids;
        r["lrmax_sigma"] = format_entry_set(lr_maxima(sigma));
        r["lrmax_pi"] = format_entry_set(lr_maxima(p));
        emit(out, plan.format, {r});
      }
      return kExitOk;
    }
    case Command::lift: {
      const Permutation& p = *plan.permutation;
      const Permutation sigma = plan.t ? lift(p, *plan.t) : prop1_lift(p);
      const std::size_t t = plan.t ? *plan.t : tail_length(p);
      if (plain) {
        out << fmt(sigma) << '\n';
      } else {
        Record r;
        r["pi"] = fmt(p);
        r["t"] = t;
        r["sigma"] = fmt(sigma);
        emit(out, plan.format, {r});
      }
      return kExitOk;
    }
    case Command::zeta:
    case Command::xi: {
      const bool is_zeta = plan.command == Command::zeta;
      const Permutation p = is_zeta ? zeta(*plan.l, *plan.m) : xi(*plan.l, *plan.m);
      if (plain) {
        out << fmt(p) << '\n';
      } else {
        Record r;
        r["l"] = *plan.l;
        r["m"] = *plan.m;
        r[is_zeta ? "zeta" : "xi"] = fmt(p);
        emit(out, plan.format, {r});
      }
      return kExitOk;
    }
    case Command::bijection: {
      Record r;
      if (plan.partition) {
        const Permutation p = callan_inverse(*plan.partition);
        r["partition"] = format_partition(*plan.partition);
        r["permutation"] = fmt(p);
        if (plain) out << fmt(p) << '\n';
      } else {
        const SetPartition part = callan_partition(*plan.permutation);
        r["permutation"] = fmt(*plan.permutation);
        r["partition"] = format_partition(part);
        if (plain) out << format_partition(part) << '\n';
      }
      if (!plain) emit(out, plan.format, {r});
      return kExitOk;
    }
    case Command::count_image: {
      warn_if_large(*plan.n, err);
      const auto report = image_of_iterate(*plan.n, *plan.t, plan.keep_elements, plan.enumeration());
      if (plain) {
        out << report.count.str() << '\n';
        if (report.elements) {
          for (const auto& p : *report.elements) out << fmt(p) << '\n';
        }
        if (plan.timing) out << "wall_time " << report.wall_time.count() << '\n';
      } else {
        emit(out, plan.format, {to_record(report, plan.compact, plan.timing)});
      }
      return kExitOk;
    }
    case Command::verify: {
      const auto opts = plan.enumeration();
      std::vector<VerificationReport> reports;
      const auto claim = parse_claim(plan.claim);
      if (!claim) {
        warn_if_large(plan.max_n, err);
        reports = verify_all(plan.max_n, opts);
      } else {
        switch (*claim) {
          case Claim::theorem1: reports.push_back(verify_theorem1(*plan.m, *plan.n, opts)); break;
          case Claim::theorem2: reports.push_back(verify_theorem2(*plan.m, opts)); break;
          case Claim::prop2: reports.push_back(verify_prop2(*plan.m, *plan.n_max, opts)); break;
          case Claim::thm3_count: reports.push_back(verify_thm3_count(*plan.n, opts)); break;
          case Claim::catalan: reports.push_back(verify_catalan(*plan.n, opts)); break;
          case Claim::west_zeilberger:
            reports.push_back(verify_west_zeilberger(*plan.n, opts));
            break;
        }
      }
      const auto failed = static_cast<std::size_t>(
          std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; }));
      if (plain) {
        for (const auto& r : reports) out << plain_verification_line(r) << '\n';
        out << (reports.size() - failed) << '/' << reports.size() << " passed\n";
      } else {
        std::vector<Record> rows;
        for (const auto& r : reports) rows.push_back(to_record(r));
        emit(out, plan.format, rows);
      }
      return failed == 0 ? kExitOk : kExitVerificationFailed;
    }
    case Command::explore: {
      const auto rows = explore_open(*plan.m, plan.enumeration());
      if (plain) {
        out << "n\tcount\tknown\n";
        for (const auto& r : rows) {
          out << r.n << '\t' << r.count.str() << '\t'
              << (r.expected ? r.label + "=" + r.expected->str() : "-") << '\n';
        }
      } else {
        std::vector<Record> recs;
        for (const auto& r : rows) recs.push_back(to_record(r, *plan.m));
        emit(out, plan.format, recs);
      }
      return kExitOk;
    }
  }
  return kExitOk;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_max_n) {
  try {
    const CommandPlan plan = parse_args(args, std::move(env_max_n));
    return execute(plan, out, err);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace stacksort::cli
