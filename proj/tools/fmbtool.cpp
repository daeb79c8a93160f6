// Command-line front end. All computation happens behind the C interface in
// fmb.h; this file only assembles operation inputs from files, stdin, and
// flags, and relays the JSON results.
//
// Exit codes mirror the library statuses: 0 verified/found, 1 refuted/not
// found, 2 invalid input or usage, 3 internal error.
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fmb.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct Io {
  std::string in_path;   // empty or "-" means stdin
  std::string out_path;  // empty or "-" means stdout
};

std::string read_all(const Io& io) {
  if (io.in_path.empty() || io.in_path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(io.in_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open input file " + io.in_path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_all(const Io& io, const char* text) {
  if (io.out_path.empty() || io.out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(io.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + io.out_path);
  f << text;
}

// Accepts either a ready operation input ({"algebra": ...}, {"lie": ...},
// {"group": ...}) or a bare entity document, which is wrapped under its
// schema-kind key. Validation itself happens inside the library.
Json wrap_entity(Json doc) {
  if (doc.is_object() && !doc.contains("algebra") && !doc.contains("lie") &&
      !doc.contains("group")) {
    const char* kind = nullptr;
    if (doc.contains("table")) kind = "group";
    else if (doc.contains("bracket") || doc.contains("pmap")) kind = "lie";
    else if (doc.contains("mult")) kind = "algebra";
    if (kind) {
      Json wrapped = Json::object();
      wrapped[kind] = std::move(doc);
      return wrapped;
    }
  }
  return doc;
}

int run_op(const std::string& op, const Json& input, const Io& io) {
  char* out = nullptr;
  fmb_status st = fmb_run_json(op.c_str(), input.dump().c_str(), &out);
  if (st == FMB_INVALID || st == FMB_INTERNAL)
    std::cerr << "error: " << fmb_last_error() << "\n";
  if (out) {
    write_all(io, out);
    fmb_string_release(out);
  }
  return static_cast<int>(st);
}

// fetches a bundled group by name and returns {"group": ...}
Json bundled_group_input(const std::string& name) {
  Json req = Json::object();
  req["name"] = name;
  char* out = nullptr;
  fmb_status st = fmb_run_json("group/bundled", req.dump().c_str(), &out);
  if (st != FMB_OK) {
    std::string msg = fmb_last_error();
    fmb_string_release(out);
    throw std::runtime_error(msg);
  }
  Json doc = Json::parse(out);
  fmb_string_release(out);
  Json input = Json::object();
  input["group"] = std::move(doc["group"]);
  return input;
}

// numeric flag that remembers whether the user set it
struct OptInt {
  int64_t value = 0;
  CLI::Option* opt = nullptr;
  void attach(CLI::App* cmd, const std::string& flag, const std::string& desc) {
    opt = cmd->add_option(flag, value, desc);
  }
  void merge(Json& doc, const char* key) const {
    if (opt && opt->count()) doc[key] = value;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact construction, verification, search, and transport of "
               "filtered multiplicative bases"};
  app.require_subcommand(1);
  app.set_version_flag("--version", fmb_version());

  Io io;
  app.add_option("--in", io.in_path, "input JSON file (default: stdin)")->expected(1);
  app.add_option("--out", io.out_path, "output JSON file (default: stdout)")->expected(1);
  int rc = 0;

  // ---- fmb: operations on augmented algebras -------------------------------
  CLI::App* fmb = app.add_subcommand("fmb", "filtered multiplicative bases of an algebra");
  fmb->require_subcommand(1);
  struct {
    OptInt budget, seed;
    bool no_rescale = false;
  } search_flags;

  auto add_doc_cmd = [&](CLI::App* parent, const char* name, const char* op,
                         const char* desc) -> CLI::App* {
    CLI::App* cmd = parent->add_subcommand(name, desc);
    cmd->callback([&, op] { rc = run_op(op, wrap_entity(Json::parse(read_all(io))), io); });
    return cmd;
  };

  add_doc_cmd(fmb, "verify", "fmb/verify",
              "verify that \"members\" is a filtered multiplicative basis");
  {
    CLI::App* cmd = fmb->add_subcommand("search", "search for a filtered multiplicative basis");
    search_flags.budget.attach(cmd, "--budget", "candidate budget");
    search_flags.seed.attach(cmd, "--seed", "random seed");
    cmd->add_flag("--no-rescale", search_flags.no_rescale, "skip canonical rescaling");
    cmd->callback([&] {
      Json doc = wrap_entity(Json::parse(read_all(io)));
      search_flags.budget.merge(doc, "budget");
      search_flags.seed.merge(doc, "seed");
      if (search_flags.no_rescale) doc["rescale"] = false;
      rc = run_op("fmb/search", doc, io);
    });
  }
  add_doc_cmd(fmb, "quotient", "fmb/quotient",
              "push \"members\" onto the quotient by the ideal spanned by \"ideal\"");
  add_doc_cmd(fmb, "regular-kernel", "fmb/regular-kernel",
              "decompose \"members\" along the ideal spanned by \"ideal\"");
  add_doc_cmd(fmb, "gr-transport", "fmb/gr-transport",
              "transport \"members\" onto the associated graded algebra");
  add_doc_cmd(fmb, "probe", "fmb/probe",
              "six-product consistency probe for the representatives in \"reps\"");
  add_doc_cmd(fmb, "certify-heisenberg", "fmb/certify-heisenberg",
              "nonexistence certificate for odd-characteristic Heisenberg envelopes");

  // ---- lie: restricted Lie algebras ----------------------------------------
  CLI::App* lie = app.add_subcommand("lie", "restricted Lie algebras and their envelopes");
  lie->require_subcommand(1);
  add_doc_cmd(lie, "env", "lie/env", "restricted envelope with its monomial basis");
  add_doc_cmd(lie, "omega", "lie/omega",
              "augmentation-ideal powers against the radical filtration");
  add_doc_cmd(lie, "word-basis", "lie/word-basis",
              "span the envelope by words in the images of \"generators\"");
  add_doc_cmd(lie, "dimsub", "lie/dimsub", "dimension subalgebra chain");
  add_doc_cmd(lie, "grlie", "lie/grlie", "associated graded restricted Lie algebra");
  add_doc_cmd(lie, "decompose", "lie/decompose",
              "decompose into cyclic restricted subalgebras");
  struct {
    OptInt m, n, s, p;
  } family_flags;
  auto add_family_cmd = [&](const char* name, const char* op, const char* desc) {
    CLI::App* cmd = lie->add_subcommand(name, desc);
    family_flags.m.attach(cmd, "--m", "abelian summand count");
    family_flags.n.attach(cmd, "--n", "chain summand count");
    family_flags.s.attach(cmd, "--s", "chain length");
    family_flags.p.attach(cmd, "--p", "field characteristic");
    cmd->callback([&, op] {
      Json doc = Json::object();
      family_flags.m.merge(doc, "m");
      family_flags.n.merge(doc, "n");
      family_flags.s.merge(doc, "s");
      family_flags.p.merge(doc, "p");
      rc = run_op(op, doc, io);
    });
  };
  add_family_cmd("family", "lie/family", "emit a member of the bundled family");
  add_family_cmd("family-fmb", "lie/family-fmb",
                 "verified word basis for a bundled family member");

  // ---- group: finite p-groups ----------------------------------------------
  CLI::App* grp = app.add_subcommand("group", "finite p-groups and their modular group algebras");
  grp->require_subcommand(1);
  std::string group_name;
  struct {
    OptInt budget, seed;
    bool no_search = false;
  } verdict_flags;
  auto add_group_cmd = [&](const char* name, const char* op, const char* desc) -> CLI::App* {
    CLI::App* cmd = grp->add_subcommand(name, desc);
    cmd->add_option("--group", group_name, "bundled group name (instead of an input document)");
    cmd->callback([&, op] {
      Json doc = group_name.empty() ? wrap_entity(Json::parse(read_all(io)))
                                    : bundled_group_input(group_name);
      rc = run_op(op, doc, io);
    });
    return cmd;
  };
  add_group_cmd("jennings", "group/jennings",
                "dimension-subgroup chain and its restricted Lie algebra");
  add_group_cmd("quillen", "group/quillen",
                "graded group algebra against the Jennings Lie envelope");
  add_group_cmd("powerful", "group/powerful", "powerfulness and nilpotency class");
  {
    CLI::App* cmd = grp->add_subcommand(
        "corollary2", "filtered-multiplicative-basis verdict for a modular group algebra");
    cmd->add_option("--group", group_name, "bundled group name (instead of an input document)");
    verdict_flags.budget.attach(cmd, "--budget", "search candidate budget");
    verdict_flags.seed.attach(cmd, "--seed", "search random seed");
    cmd->add_flag("--no-search", verdict_flags.no_search, "skip the basis search");
    cmd->callback([&] {
      Json doc = group_name.empty() ? wrap_entity(Json::parse(read_all(io)))
                                    : bundled_group_input(group_name);
      verdict_flags.budget.merge(doc, "budget");
      verdict_flags.seed.merge(doc, "seed");
      if (verdict_flags.no_search) doc["search"] = false;
      rc = run_op("group/corollary2", doc, io);
    });
  }
  {
    CLI::App* cmd = grp->add_subcommand("bundled", "list bundled groups or emit one");
    cmd->add_option("--group", group_name, "bundled group name");
    cmd->callback([&] {
      if (group_name.empty()) {
        rc = run_op("group/bundled", Json::object(), io);
        return;
      }
      // emit the bare group document, canonically serialized, ready to pipe
      Json doc = Json::object();
      doc["to"] = "group";
      doc["input"] = std::move(bundled_group_input(group_name)["group"]);
      rc = run_op("convert", doc, io);
    });
  }

  // ---- scenario: named end-to-end runs -------------------------------------
  {
    CLI::App* cmd = app.add_subcommand("scenario", "run a named end-to-end scenario");
    static const std::string names_help =
        "scenario name (lemma2, thm1-roundtrip, thm3-transport, thm2-probe, "
        "quillen, corollary2, lalpha)";
    std::string scen_name;
    cmd->add_option("name", scen_name, names_help)->required();
    struct {
      OptInt m, n, s, p, random, seed, budget, samples;
    } flags;
    flags.m.attach(cmd, "--m", "abelian summand count");
    flags.n.attach(cmd, "--n", "chain summand count");
    flags.s.attach(cmd, "--s", "chain length");
    flags.p.attach(cmd, "--p", "field characteristic");
    flags.random.attach(cmd, "--random", "randomized instance count");
    flags.seed.attach(cmd, "--seed", "random seed");
    flags.budget.attach(cmd, "--budget", "search candidate budget");
    flags.samples.attach(cmd, "--samples", "randomized sample count");
    cmd->callback([&app, &io, &rc, &scen_name, flags] {
      (void)app;
      Json doc = Json::object();
      flags.m.merge(doc, "m");
      flags.n.merge(doc, "n");
      flags.s.merge(doc, "s");
      flags.p.merge(doc, "p");
      flags.random.merge(doc, "random");
      flags.seed.merge(doc, "seed");
      flags.budget.merge(doc, "budget");
      flags.samples.merge(doc, "samples");
      rc = run_op("scenario/" + scen_name, doc, io);
    });
  }

  // ---- convert / ops -------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand("convert", "canonicalize or convert a document");
    static std::string to;
    cmd->add_option("--to", to, "target schema: group, lie, or algebra")->required();
    cmd->callback([&] {
      Json doc = Json::object();
      doc["to"] = to;
      doc["input"] = Json::parse(read_all(io));
      rc = run_op("convert", doc, io);
    });
  }
  {
    CLI::App* cmd = app.add_subcommand("ops", "list the available operations");
    cmd->callback([&] {
      std::ostringstream ss;
      for (int i = 0; i < fmb_op_count(); ++i) ss << fmb_op_name(i) << "\n";
      write_all(io, ss.str().c_str());
      rc = 0;
    });
  }

  // let --in/--out appear after the subcommand as well as before it
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* node) {
    for (CLI::App* sub : node->get_subcommands({})) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
