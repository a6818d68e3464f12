// Command-line driver. Exit codes: 0 true/ok, 1 false, 2 invalid input or failed
// precondition, 3 undecided or verified on witnesses only.

#include <iostream>

#include "CLI11.hpp"
#include "gradlie/gradlie.hpp"

using namespace gradlie;
using io::Json;

namespace {

enum Exit : int { kOk = 0, kFalse = 1, kInvalid = 2, kUndecided = 3 };

struct Options {
  std::string file;
  std::string output;
  std::string format = "text";
  bool graded = false;
  bool weak = false;
  std::uint64_t budget = 0;
  std::uint32_t prime = 0;
  bool list = false;
};

/// Key/value report printed either as "key: value" lines or as one JSON object.
class Report {
 public:
  void add(const std::string& key, const std::string& text, Json value) {
    lines_.emplace_back(key, text);
    json_[key] = std::move(value);
  }
  void add(const std::string& key, const std::string& text) { add(key, text, text); }
  void add(const std::string& key, const char* text) { add(key, std::string(text)); }
  void add(const std::string& key, bool b) { add(key, b ? "true" : "false", b); }
  void add(const std::string& key, std::size_t n) { add(key, std::to_string(n), n); }
  void attach(const std::string& key, Json value) { json_[key] = std::move(value); }

  void print(const std::string& format) const {
    if (format == "json") {
      std::cout << io::format(json_);
      return;
    }
    for (const auto& [k, v] : lines_) std::cout << k << ": " << v << "\n";
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
  Json json_ = Json::object();
};

template <ExactField K>
std::string render(const Vec<K>& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    auto c = v[i].str();
    const bool neg = !c.empty() && c[0] == '-';
    if (neg) c.erase(0, 1);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (c != "1") out += c + "*";
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

std::string degree_map(const std::map<std::int64_t, std::size_t>& m) {
  std::string out = "{";
  for (const auto& [d, n] : m) out += (out.size() > 1 ? ", " : "") + std::to_string(d) + ": " + std::to_string(n);
  return out + "}";
}

Json degree_json(const std::map<std::int64_t, std::size_t>& m) {
  Json j = Json::object();
  for (const auto& [d, n] : m) j[std::to_string(d)] = n;
  return j;
}

template <ExactField K>
void add_decision(Report& r, const std::string& key, const Decision<K>& d, const std::vector<std::string>& names) {
  std::string text = d.decided() ? (*d.value ? "true" : "false") : "undecided";
  text += std::string(" (") + method_name(d.method) + ")";
  Json j{{"value", d.decided() ? Json(*d.value) : Json(nullptr)}, {"method", method_name(d.method)}};
  if (d.witness && d.witness->size() == names.size()) {
    text += " witness " + render(*d.witness, names);
    j["witness"] = render(*d.witness, names);
  }
  if (!d.note.empty()) {
    if (!d.decided()) text += ": " + d.note;
    j["note"] = d.note;
  }
  r.add(key, text, j);
}

template <ExactField K>
int exit_for(const Decision<K>& d) {
  return d.decided() ? (*d.value ? kOk : kFalse) : kUndecided;
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << io::format(j);
}

std::uint64_t budget_of(const Options& o) { return o.budget ? o.budget : default_budget(); }

template <ExactField K>
std::vector<std::string> pair_names(const JordanPair<K>& V) {
  auto n = V.names(Sign::Plus);
  for (const auto& s : V.names(Sign::Minus)) n.push_back(s);
  return n;
}

// ---------------------------------------------------------------- commands

int cmd_validate(const Options& o) {
  Report r;
  try {
    auto d = io::load_document(o.file);
    r.add("kind", d.kind);
    r.add("scalars", d.field.name());
    std::size_t dim = io::with_field(d.field, [&]<class K>(FieldTag) -> std::size_t {
      if (d.kind == "lie") {
        auto L = io::parse_lie<K>(d);
        if (auto S = io::parse_subalgebra<K>(d, L.dim())) {
          if (!is_subalgebra(L, *S)) throw NotASubalgebra("subalgebra is not closed under the bracket");
          r.add("subalgebra_dim", S->dim());
        }
        return L.dim();
      }
      if (d.kind == "assoc") return io::parse_assoc<K>(d).dim();
      if (d.kind == "jordan_pair") {
        auto V = io::parse_pair<K>(d);
        if (auto S = io::parse_subpair<K>(d, V)) {
          if (!is_subpair(V, *S)) throw NotASubalgebra("subpair is not closed under the triple product");
          r.add("subpair_dim", S->dim());
        }
        return V.dim(Sign::Plus) + V.dim(Sign::Minus);
      }
      if (d.kind == "jordan_triple") return io::parse_triple<K>(d).dim();
      return io::parse_jordan_algebra<K>(d).dim();
    });
    r.add("dim", dim);
    r.add("valid", true);
    r.print(o.format);
    return kOk;
  } catch (const Error& e) {
    r.add("valid", false);
    r.add("error", e.kind());
    r.add("detail", e.what());
    r.print(o.format);
    return kInvalid;
  }
}

int cmd_analyze(const Options& o) {
  auto d = io::load_document(o.file);
  return io::with_field(d.field, [&]<class K>(FieldTag) -> int {
    Report r;
    r.add("kind", d.kind);
    r.add("scalars", d.field.name());
    if (d.kind == "lie") {
      auto L = io::parse_lie<K>(d);
      auto s = analyze(L, o.graded, budget_of(o));
      r.add("dim", s.dim);
      r.add("graded", o.graded);
      r.add("center_dim", s.center_dim);
      if (s.killing_determinant) r.add("killing_determinant", s.killing_determinant->str());
      add_decision(r, "semiprime", s.semiprime, L.names());
      add_decision(r, "prime", s.prime, L.names());
      add_decision(r, "strongly_nondegenerate", s.strongly_nondegenerate, L.names());
      if (s.socle) {
        std::string dims;
        Json sj = Json::array();
        for (const auto& S : s.socle->summands) {
          dims += (dims.empty() ? "" : " + ") + std::to_string(S.dim());
          sj.push_back(S.dim());
        }
        r.add("socle_dim", s.socle->socle.space.dim());
        r.add("socle_summands", dims.empty() ? "none" : dims, sj);
        r.add("socle_complete", s.socle->complete);
      } else {
        r.add("socle", "unavailable: " + s.socle_note);
      }
      std::string sup;
      for (auto x : s.support) sup += (sup.empty() ? "" : ", ") + std::to_string(x);
      r.add("support", "{" + sup + "}", s.support);
      r.print(o.format);
      return kOk;
    }
    if (d.kind == "jordan_pair") {
      auto V = io::parse_pair<K>(d);
      r.add("dim_plus", V.dim(Sign::Plus));
      r.add("dim_minus", V.dim(Sign::Minus));
      r.add("ider_dim", inner_derivations(V).dim());
      add_decision(r, "strongly_nondegenerate", pair_is_strongly_nondegenerate(V, budget_of(o)), pair_names(V));
      add_decision(r, "semiprime", pair_is_semiprime(V, budget_of(o)), pair_names(V));
      r.print(o.format);
      return kOk;
    }
    throw ParseError("analyze supports kinds lie and jordan_pair");
  });
}

int cmd_qmax(const Options& o) {
  auto d = io::load_document(o.file);
  return io::with_field(d.field, [&]<class K>(FieldTag) -> int {
    auto L = io::parse_lie<K>(d);
    auto M = maximal_quotients(L, o.graded, budget_of(o));
    Report r;
    r.add("graded", o.graded);
    r.add("dim", M.algebra.dim());
    r.add("l_dim", L.dim());
    r.add("embedding_bijective", M.embedding_bijective());
    r.add("witness_ideal_dim", M.witness_ideal.space.dim());
    r.add("components", degree_map(M.derivations.component_dims()), degree_json(M.derivations.component_dims()));
    const auto sup = L.support();
    const bool three = L.group().kind() == GradingGroup::Kind::Integers &&
                       std::all_of(sup.begin(), sup.end(), [](std::int64_t x) { return x >= -1 && x <= 1; });
    if (three) {
      auto t = compare_graded_quotients(L, budget_of(o));
      r.add("qm_components", degree_map(t.qm_components), degree_json(t.qm_components));
      r.add("qgr_components", degree_map(t.qgr_components), degree_json(t.qgr_components));
      r.add("within_five_grading", t.within_five_grading);
      r.add("outer_components_vanish", t.outer_components_vanish);
      r.add("qm_isomorphic_to_qgr", t.isomorphic());
    }
    auto file = io::lie_json(M.algebra);
    r.attach("algebra", file);
    r.attach("embedding", io::matrix_json(M.embedding));
    r.attach("witness_ideal", io::subspace_json(M.witness_ideal.space));
    if (!o.output.empty()) write_file(o.output, file);
    r.print(o.format);
    return kOk;
  });
}

int cmd_check_quotient(const Options& o) {
  auto d = io::load_document(o.file);
  return io::with_field(d.field, [&]<class K>(FieldTag) -> int {
    auto Q = io::parse_lie<K>(d);
    auto S = io::parse_subalgebra<K>(d, Q.dim());
    if (!S) throw ParseError("subalgebra: missing; check-quotient needs L inside Q");
    QuotientEmbedding<K> E(Q, *S);
    auto v = o.weak ? is_weak_quotient(E, o.graded, budget_of(o)) : is_quotient(E, o.graded, budget_of(o));
    Report r;
    r.add("property", std::string(o.graded ? "graded " : "") + (o.weak ? "weak " : "") + "algebra of quotients");
    r.add("l_dim", S->dim());
    r.add("q_dim", Q.dim());
    std::string verdict = v.decision.decided() ? (*v.decision.value ? "true" : "false")
                          : v.verified_on_witnesses() ? "verified-on-witnesses"
                                                      : "undecided";
    r.add("verdict", verdict);
    r.add("method", method_name(v.decision.method));
    if (v.witness_p) r.add("witness_p", render(*v.witness_p, Q.names()));
    if (v.witness_q) r.add("witness_q", render(*v.witness_q, Q.names()));
    if (!v.decision.note.empty()) r.add("note", v.decision.note);
    r.print(o.format);
    return exit_for(v.decision);
  });
}

int cmd_tkk(const Options& o) {
  auto d = io::load_document(o.file);
  return io::with_field(d.field, [&]<class K>(FieldTag) -> int {
    auto V = io::parse_pair<K>(d);
    auto T = tkk(V);
    Report r;
    r.add("dim", T.algebra.dim());
    r.add("components", degree_map({{-1, T.minus_dim}, {0, T.zero_dim}, {1, T.plus_dim}}),
          degree_json({{-1, T.minus_dim}, {0, T.zero_dim}, {1, T.plus_dim}}));
    r.add("center_dim", center(T.algebra).dim());
    auto file = io::lie_json(T.algebra);
    r.attach("algebra", file);
    if (!o.output.empty()) write_file(o.output, file);
    r.print(o.format);
    return kOk;
  });
}

int cmd_mquotients(const Options& o) {
  auto d = io::load_document(o.file);
  return io::with_field(d.field, [&]<class K>(FieldTag) -> int {
    auto W = io::parse_pair<K>(d);
    auto S = io::parse_subpair<K>(d, W).value_or(full_subpair(W));
    auto v = is_pair_of_M_quotients(W, S, budget_of(o));
    Report r;
    r.add("v_dim", S.dim());
    r.add("w_dim", W.dim(Sign::Plus) + W.dim(Sign::Minus));
    std::string verdict = v.decision.decided() ? (*v.decision.value ? "true" : "false")
                          : v.verified_on_witnesses() ? "verified-on-witnesses"
                                                      : "undecided";
    r.add("verdict", verdict);
    r.add("method", method_name(v.decision.method));
    r.add("witnesses_checked", v.witnesses_checked);
    if (v.witness_q) r.add("witness_q", std::string(sign_name(*v.witness_sign)) + " " + render(*v.witness_q, W.names(*v.witness_sign)));
    if (!v.decision.note.empty()) r.add("note", v.decision.note);
    r.print(o.format);
    return exit_for(v.decision);
  });
}

int cmd_jmax(const Options& o) {
  auto d = io::load_document(o.file);
  return io::with_field(d.field, [&]<class K>(FieldTag) -> int {
    Report r;
    Json file;
    Decision<K> verdict;
    if (d.kind == "jordan_pair") {
      auto M = maximal_pair_quotients(io::parse_pair<K>(d), budget_of(o));
      r.add("dim_plus", M.pair.dim(Sign::Plus));
      r.add("dim_minus", M.pair.dim(Sign::Minus));
      r.add("equals_input", M.is_identity());
      r.add("products_preserved", M.products_preserved);
      file = io::pair_json(M.pair);
      r.attach("embedding", Json{{"plus", io::matrix_json(M.embedding[0])}, {"minus", io::matrix_json(M.embedding[1])}});
      verdict = M.verdict.decision;
    } else if (d.kind == "jordan_triple") {
      auto M = maximal_triple_quotients(io::parse_triple<K>(d), budget_of(o));
      r.add("dim", M.triple.dim());
      r.add("equals_input", M.is_identity());
      r.add("products_preserved", M.products_preserved);
      file = io::triple_json(M.triple);
      r.attach("embedding", io::matrix_json(M.embedding));
      verdict = M.verdict.decision;
    } else if (d.kind == "jordan_algebra") {
      auto M = maximal_jordan_algebra_quotients(io::parse_jordan_algebra<K>(d), budget_of(o));
      r.add("dim", M.triple.triple.dim());
      r.add("equals_input", M.triple.is_identity());
      r.add("products_preserved", M.triple.products_preserved);
      r.add("unital", M.algebra.has_value());
      file = M.algebra ? io::jordan_algebra_json(*M.algebra) : io::triple_json(M.triple.triple);
      r.attach("embedding", io::matrix_json(M.triple.embedding));
      verdict = M.triple.verdict.decision;
    } else {
      throw ParseError("jmax supports kinds jordan_pair, jordan_triple and jordan_algebra");
    }
    std::string v = verdict.decided() ? (*verdict.value ? "true" : "false") : "undecided";
    r.add("m_quotients_verdict", v + " (" + method_name(verdict.method) + ")");
    r.attach("result", file);
    if (!o.output.empty()) write_file(o.output, file);
    r.print(o.format);
    return kOk;
  });
}

int cmd_gallery(const Options& o) {
  if (o.list) {
    for (const auto& e : gallery::gallery_entries()) {
      std::string name = e.name;
      if (e.arity == 1) name += "(n)";
      if (e.arity == 2) name += "(p,q)";
      std::cout << name << "  " << e.summary << "\n";
    }
    return kOk;
  }
  if (o.file.empty()) throw ParseError("gallery: a name is required (see --list)");
  const FieldTag f = o.prime ? FieldTag::prime(o.prime) : FieldTag::rationals();
  auto file = gallery::gallery_json(o.file, f);
  if (!o.output.empty())
    write_file(o.output, file);
  else
    std::cout << io::format(file);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded Lie algebras of quotients, Jordan pairs and the TKK construction"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c, bool file_required = true) {
    auto* f = c->add_option("file", o.file, "algebra file (JSON)");
    if (file_required) f->required();
    c->add_option("--budget", o.budget, "enumeration cap for exhaustive scans (default: GRADLIE_BUDGET or 1000000)");
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto* validate = app.add_subcommand("validate", "parse a file and run the axiom checks of its kind");
  common(validate);
  auto* analyze_cmd = app.add_subcommand("analyze", "center, Killing form, semiprime / prime / strongly nondegenerate, socle");
  common(analyze_cmd);
  analyze_cmd->add_flag("--graded", o.graded, "use graded ideals");
  auto* qmax = app.add_subcommand("qmax", "maximal (graded) algebra of quotients Der(E0, L)");
  common(qmax);
  qmax->add_flag("--graded", o.graded, "build the maximal graded algebra of quotients");
  qmax->add_option("-o,--output", o.output, "write the algebra file here");
  auto* check = app.add_subcommand("check-quotient", "decide whether Q is a (graded) (weak) algebra of quotients of L");
  common(check);
  check->add_flag("--graded", o.graded, "graded variant");
  check->add_flag("--weak", o.weak, "weak variant");
  auto* tkk_cmd = app.add_subcommand("tkk", "TKK algebra of a Jordan pair");
  common(tkk_cmd);
  tkk_cmd->add_option("-o,--output", o.output, "write the algebra file here");
  auto* mq = app.add_subcommand("mquotients", "decide whether W is a pair of M-quotients of its subpair");
  common(mq);
  auto* jmax = app.add_subcommand("jmax", "maximal Jordan pair / triple / algebra of quotients");
  common(jmax);
  jmax->add_option("-o,--output", o.output, "write the result file here");
  auto* gal = app.add_subcommand("gallery", "print a gallery instance as an algebra file");
  gal->add_option("name", o.file, "gallery name, e.g. sl2, sln_e11(3), pair_rect(1,2)");
  gal->add_option("--prime", o.prime, "build over F_p instead of Q");
  gal->add_option("-o,--output", o.output, "write the file here");
  gal->add_flag("--list", o.list, "list gallery names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*analyze_cmd) return cmd_analyze(o);
    if (*qmax) return cmd_qmax(o);
    if (*check) return cmd_check_quotient(o);
    if (*tkk_cmd) return cmd_tkk(o);
    if (*mq) return cmd_mquotients(o);
    if (*jmax) return cmd_jmax(o);
    if (*gal) return cmd_gallery(o);
  } catch (const Undecided& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kUndecided;
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
