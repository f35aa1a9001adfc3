// spinal: counting, enumeration, codecs and verification from the shell.

#include "spinal/codec.hpp"
#include "spinal/counting.hpp"
#include "spinal/enumeration.hpp"
#include "spinal/errors.hpp"
#include "spinal/marked_tree.hpp"
#include "spinal/network_io.hpp"
#include "spinal/verify.hpp"
#include "spinal/word.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace spinal;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_verify = 2;
constexpr int exit_budget = 3;

struct Options {
  std::string family;
  int n = -1;
  int k = -1;
  int max_n = 8;
  int max_k = 4;
  std::string cls = "c1";
  std::string format;
  std::string input = "-";
  std::string lrq;
  std::optional<std::string> only;
  double budget_seconds = EnumerationBudget{}.time_limit;
  std::uint64_t max_objects = EnumerationBudget{}.max_objects;
  bool emit = false;
  bool dedup_report = false;
  bool roundtrip = false;
  bool labeled = false;
  bool steps = false;
};

std::string read_input(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    os << in.rdbuf();
  }
  return os.str();
}

WordClass word_class(const std::string& cls) {
  if (cls == "c1") return WordClass::c1;
  if (cls == "c2") return WordClass::c2;
  throw RangeError("unknown class '" + cls + "'");
}

EnumerationBudget budget_of(const Options& o) {
  EnumerationBudget b;
  b.time_limit = o.budget_seconds;
  b.max_objects = o.max_objects;
  return b;
}

void require_nk(const Options& o) {
  if (o.n < 0 || o.k < 0) throw RangeError("n and k are required and must be nonnegative");
}

json partition_json(const PairPartition& p) {
  json pairs = json::array();
  for (const auto& [a, b] : p.pairs) pairs.push_back({a, b});
  return {{"pairs", pairs}, {"singletons", p.singletons}};
}

json marked_tree_json(const MarkedTree& mt) {
  json nodes = json::array();
  for (const auto& v : mt.nodes) {
    json node = {{"id", v.id}, {"kind", std::string(to_string(v.kind))}};
    if (v.label) node["label"] = *v.label;
    nodes.push_back(node);
  }
  json arcs = json::array();
  for (const auto& a : mt.arcs) arcs.push_back({a.tail, a.head});
  return {{"nodes", nodes}, {"arcs", arcs}};
}

std::string network_text(const PhyloNetwork& net, const std::string& format) {
  if (format == "dot") return format_network_dot(net);
  return format_network_json(net) + "\n";
}

std::string letters(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i] == 0 ? std::string("L") : std::to_string(v[i]);
  }
  return out;
}

int finish_stream(const EnumerationStatus& st, const Options& o) {
  std::cout << "count=" << st.emitted << '\n';
  if (st.complete) return exit_ok;
  std::cerr << "error[budget-exceeded]: stream stopped after " << st.emitted << " objects (max-objects "
            << o.max_objects << ", budget " << o.budget_seconds << " s)\n";
  return exit_budget;
}

int cmd_count(const Options& o) {
  const auto f = parse_family(o.family);
  if (!f) throw RangeError("unknown family '" + o.family + "'");
  require_nk(o);
  const ExactCount c = count_family(*f, o.n, o.k);
  if (o.format == "json") {
    std::cout << json{{"family", o.family}, {"n", o.n}, {"k", o.k}, {"value", c.value.str()},
                      {"provenance", std::string(to_string(c.provenance))}}
                     .dump()
              << '\n';
  } else {
    std::cout << c.value << ' ' << to_string(c.provenance) << '\n';
  }
  return exit_ok;
}

int cmd_table(const Options& o) {
  const auto f = parse_family(o.family);
  if (!f) throw RangeError("unknown family '" + o.family + "'");
  const CountTable t = tabulate(*f, o.max_n, o.max_k);
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& r : t.rows) {
      rows.push_back({{"n", r.n}, {"k", r.k}, {"value", r.count.value.str()},
                      {"provenance", std::string(to_string(r.count.provenance))}});
    }
    std::cout << rows.dump() << '\n';
  } else {
    std::cout << t.to_csv();
  }
  return exit_ok;
}

int cmd_enumerate(const Options& o) {
  require_nk(o);
  const EnumerationBudget b = budget_of(o);
  const std::string& fam = o.family;
  auto emit_word = [&o](const Word& w) {
    if (o.emit) std::cout << w.to_string() << '\n';
    return true;
  };
  auto emit_net = [&o](const PhyloNetwork& net) {
    if (o.emit) std::cout << network_text(net, o.format);
    return true;
  };
  auto emit_tree = [&o](const MarkedTree& mt) {
    if (o.emit) std::cout << marked_tree_json(mt).dump() << '\n';
    return true;
  };
  if (fam == "partitions") {
    return finish_stream(enumerate_pair_partitions(o.n, o.k, [&o](const PairPartition& p) {
      if (o.emit) std::cout << partition_json(p).dump() << '\n';
      return true;
    }, b), o);
  }
  if (fam == "c1") return finish_stream(enumerate_c1_classes(o.n, o.k, emit_word, b), o);
  if (fam == "c2") return finish_stream(enumerate_c2_classes(o.n, o.k, emit_word, b), o);
  if (fam == "nlstc") return finish_stream(enumerate_nlstc(o.n, o.k, emit_net, b), o);
  if (fam == "nlsctc") return finish_stream(enumerate_nlsctc(o.n, o.k, emit_net, b), o);
  if (fam == "marked") return finish_stream(enumerate_marked_trees(o.n, o.k, o.labeled, emit_tree, b), o);
  if (fam == "stc") {
    DedupStats stats;
    const auto st = enumerate_stc(o.n, o.k, emit_net, b, &stats);
    if (o.dedup_report) {
      std::cout << "generated=" << stats.generated << " duplicates=" << stats.duplicates << " cherry=" << stats.cherry
                << " non_cherry=" << stats.non_cherry << '\n';
    }
    return finish_stream(st, o);
  }
  throw RangeError("cannot enumerate family '" + fam + "'");
}

int cmd_encode(const Options& o) {
  const PhyloNetwork net = parse_network_json(read_input(o.input));
  if (o.format == "lrq") {
    std::cout << lrq_encode(net).to_string() << '\n';
    return exit_ok;
  }
  const WordClass cls = word_class(o.cls);
  const Word w = cls == WordClass::c1 ? encode_nlstc(net) : encode_nlsctc(net);
  std::cout << format_word_text(w);
  if (o.roundtrip) {
    const PhyloNetwork back = cls == WordClass::c1 ? decode_nlstc(w) : decode_nlsctc(w);
    if (!isomorphic(back, net)) {
      std::cerr << "error[roundtrip]: decoded network is not isomorphic to the input\n";
      return exit_verify;
    }
  }
  return exit_ok;
}

int cmd_decode(const Options& o) {
  const Word w = parse_word_text(read_input(o.input));
  const WordClass cls = word_class(o.cls);
  const PhyloNetwork net = cls == WordClass::c1 ? decode_nlstc(w) : decode_nlsctc(w);
  if (o.roundtrip) {
    const Word back = cls == WordClass::c1 ? encode_nlstc(net) : encode_nlsctc(net);
    if (back != canonicalize_tilde(w, cls)) {
      std::cerr << "error[roundtrip]: re-encoding gives " << back.to_string() << '\n';
      return exit_verify;
    }
  }
  std::cout << network_text(net, o.format);
  return exit_ok;
}

int cmd_transform(const Options& o) {
  const std::string text = o.lrq.empty() ? read_input(o.input) : o.lrq;
  const LrqWord u = parse_lrq(text);
  const TransformSteps s = transform_t_steps(u);
  if (o.steps) {
    std::cout << "w1=" << letters(s.substituted) << '\n';
    std::cout << "w2=" << letters(s.lettered) << '\n';
    std::cout << "w3=" << letters(s.reversed) << '\n';
  }
  std::cout << format_word_text(s.result);
  return exit_ok;
}

int cmd_verify(const Options& o) {
  VerifyOptions v;
  v.only = o.only;
  v.budget = budget_of(o);
  const VerifyReport r = run_verification(v);
  std::cout << r.to_string();
  std::cout << "pass=" << r.count(CheckStatus::pass) << " fail=" << r.count(CheckStatus::fail)
            << " skipped=" << r.count(CheckStatus::skipped) << '\n';
  return r.ok() ? exit_ok : exit_verify;
}

int cmd_oracle(const Options& o) {
  require_nk(o);
  EnumerationBudget b = oracle_budget();
  b.time_limit = o.budget_seconds;
  b.max_objects = o.max_objects;
  const OracleResult r = brute_force_oracle(o.n, o.k, o.labeled, b);
  if (o.emit) {
    for (const auto& net : r.networks) std::cout << network_text(net, o.format);
  }
  std::cout << "count=" << r.count.value << '\n';
  return exit_ok;
}

void add_nk(CLI::App* sub, Options& o) {
  sub->add_option("n,--n", o.n, "number of leaves (or letters)");
  sub->add_option("k,--k", o.k, "number of reticulations (or thrice-used letters)");
}

void add_budget(CLI::App* sub, Options& o) {
  sub->add_option("--budget-seconds", o.budget_seconds, "wall-clock budget");
  sub->add_option("--max-objects", o.max_objects, "object budget");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spinal tree-child networks: counts, streams, codecs"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "exact count of one family at (n, k)");
  count->add_option("family,--family", o.family, "stc|nlstc|nlsctc|c1|c2|bessel|s|d")->required();
  add_nk(count, o);
  count->add_option("--format", o.format, "text|json");

  auto* table = app.add_subcommand("table", "table of one family");
  table->add_option("family,--family", o.family)->required();
  table->add_option("max_n,--max-n", o.max_n);
  table->add_option("max_k,--max-k", o.max_k);
  table->add_option("--format", o.format, "csv|json");

  auto* enumerate = app.add_subcommand("enumerate", "stream the objects of one family");
  enumerate->add_option("family,--family", o.family, "partitions|c1|c2|nlstc|nlsctc|marked|stc")->required();
  add_nk(enumerate, o);
  add_budget(enumerate, o);
  enumerate->add_flag("--emit", o.emit, "print every object, one per line");
  enumerate->add_flag("--dedup-report", o.dedup_report, "print collision statistics (stc)");
  enumerate->add_flag("--labeled", o.labeled, "labeled marked trees");
  enumerate->add_option("--format", o.format, "json|dot");

  auto* encode = app.add_subcommand("encode", "network JSON -> word");
  encode->add_option("input,--input", o.input, "network JSON file, - for stdin");
  encode->add_option("--class", o.cls, "c1|c2");
  encode->add_option("--format", o.format, "word|lrq");
  encode->add_flag("--roundtrip", o.roundtrip, "decode again and compare");

  auto* decode = app.add_subcommand("decode", "word -> network JSON");
  decode->add_option("input,--input", o.input, "word text file, - for stdin");
  decode->add_option("--class", o.cls, "c1|c2");
  decode->add_option("--format", o.format, "json|dot");
  decode->add_flag("--roundtrip", o.roundtrip, "encode again and compare");

  auto* transform = app.add_subcommand("transform", "LRQ reading -> word");
  transform->add_option("lrq,--lrq", o.lrq, "e.g. \"L R1 L Q1 L\"");
  transform->add_option("--input", o.input, "file holding the reading");
  transform->add_flag("--steps", o.steps, "print the intermediate words");

  auto* verify = app.add_subcommand("verify", "run the identity matrix");
  verify->add_option("--only", o.only, "single identity");
  add_budget(verify, o);

  auto* oracle = app.add_subcommand("oracle", "exhaustive search count");
  add_nk(oracle, o);
  add_budget(oracle, o);
  oracle->add_flag("--labeled", o.labeled);
  oracle->add_flag("--emit", o.emit);
  oracle->add_option("--format", o.format, "json|dot");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[usage]: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (*count) return cmd_count(o);
    if (*table) return cmd_table(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*encode) return cmd_encode(o);
    if (*decode) return cmd_decode(o);
    if (*transform) return cmd_transform(o);
    if (*verify) return cmd_verify(o);
    if (*oracle) return cmd_oracle(o);
  } catch (const BudgetExceededError& e) {
    std::cerr << "error[" << e.code() << "]: " << e.what() << '\n';
    return exit_budget;
  } catch (const Error& e) {
    std::cerr << "error[" << e.code() << "]: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
