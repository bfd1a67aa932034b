#include "dikeopt/lp_format.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "dikeopt/error.hpp"

namespace dikeopt {

LpModel to_lp_model(const ConstraintSystem& sys, const Instance& inst) {
  LpModel model;
  model.varNames.reserve(sys.vars.size());
  for (int i = 0; i < sys.vars.size(); ++i) model.varNames.push_back(sys.varName(i));
  model.objective = sys.objective;
  for (const auto& row : sys.rows) {
    LpModel::LpRow out;
    out.name = row.label(inst);
    for (const auto& [var, coeff] : row.coeffs) out.terms.emplace_back(var, Rational(coeff));
    out.rhs = row.rhs;
    model.rows.push_back(std::move(out));
  }
  model.bounds.assign(model.varNames.size(), {Rational(0), Rational(1)});
  return model;
}

namespace {

std::string coeff_str(const Rational& c) { return to_decimal_string(c); }

void write_terms(std::ostream& out, const std::vector<std::pair<int, Rational>>& terms,
                 const std::vector<std::string>& names) {
  bool first = true;
  for (const auto& [var, coeff] : terms) {
    if (coeff == 0) continue;
    Rational mag = abs(coeff);
    if (first) {
      if (coeff < 0) out << "- ";
      first = false;
    } else {
      out << (coeff < 0 ? " - " : " + ");
    }
    if (mag != 1) out << coeff_str(mag) << " ";
    out << names[static_cast<size_t>(var)];
  }
  if (first) out << "0 " << names[0];  // degenerate all-zero row, keep it parseable
}

}  // namespace

void write_lp(const LpModel& model, std::ostream& out) {
  out << "Minimize\n obj:";
  bool any = false;
  for (size_t i = 0; i < model.objective.size(); ++i) {
    const Rational& c = model.objective[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    out << (any ? (c < 0 ? " - " : " + ") : (c < 0 ? " - " : " "));
    if (mag != 1) out << coeff_str(mag) << " ";
    out << model.varNames[i];
    any = true;
  }
  if (!any) out << " 0 " << (model.varNames.empty() ? "x0" : model.varNames[0]);
  out << "\nSubject To\n";
  for (const auto& row : model.rows) {
    out << " " << row.name << ": ";
    write_terms(out, row.terms, model.varNames);
    out << " = " << coeff_str(row.rhs) << "\n";
  }
  out << "Bounds\n";
  for (size_t i = 0; i < model.varNames.size(); ++i) {
    out << " " << coeff_str(model.bounds[i].first) << " <= " << model.varNames[i]
        << " <= " << coeff_str(model.bounds[i].second) << "\n";
  }
  out << "End\n";
}

void export_lp(const ConstraintSystem& sys, const Instance& inst,
               const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  write_lp(to_lp_model(sys, inst), out);
  if (!out) fail(ErrorCode::IoError, "write failed for " + path.string());
}

namespace {

// Tokenizer for the small LP dialect we emit: names, numbers, ':', '=',
// '<=', '+', '-'. Newlines are plain whitespace except that section
// keywords sit on their own lines.
struct LpTokens {
  std::vector<std::string> tokens;
  size_t pos = 0;

  bool done() const { return pos >= tokens.size(); }
  const std::string& peek() const {
    static const std::string empty;
    return done() ? empty : tokens[pos];
  }
  std::string take() {
    if (done()) fail(ErrorCode::IoError, "unexpected end of LP file");
    return tokens[pos++];
  }
  void expect(const std::string& tok) {
    std::string got = take();
    if (got != tok) fail(ErrorCode::IoError, "expected '" + tok + "' but found '" + got + "'");
  }
};

bool is_number_start(const std::string& tok) {
  return !tok.empty() && (std::isdigit(static_cast<unsigned char>(tok[0])) || tok[0] == '.');
}

LpTokens tokenize(std::istream& in) {
  LpTokens result;
  std::string line;
  while (std::getline(in, line)) {
    if (auto comment = line.find('\\'); comment != std::string::npos) line.resize(comment);
    std::string cur;
    auto flush = [&]() {
      if (!cur.empty()) {
        result.tokens.push_back(cur);
        cur.clear();
      }
    };
    for (size_t i = 0; i < line.size(); ++i) {
      char c = line[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else if (c == ':' || c == '+' || c == '-' || c == '=') {
        flush();
        result.tokens.push_back(std::string(1, c));
      } else if (c == '<' && i + 1 < line.size() && line[i + 1] == '=') {
        flush();
        result.tokens.push_back("<=");
        ++i;
      } else {
        cur += c;
      }
    }
    flush();
  }
  return result;
}

Rational parse_number(LpTokens& toks) {
  return parse_rational(toks.take());
}

}  // namespace

LpModel parse_lp(std::istream& in) {
  LpTokens toks = tokenize(in);
  LpModel model;
  std::map<std::string, int> varIndex;
  auto var_of = [&](const std::string& name) {
    auto it = varIndex.find(name);
    if (it != varIndex.end()) return it->second;
    int idx = static_cast<int>(model.varNames.size());
    varIndex.emplace(name, idx);
    model.varNames.push_back(name);
    return idx;
  };

  std::string head = toks.take();
  if (head != "Minimize" && head != "minimize" && head != "MINIMIZE")
    fail(ErrorCode::IoError, "LP file must start with Minimize");

  // Objective: optional "obj :", then a signed term list up to "Subject".
  if (toks.peek() == "obj") {
    toks.take();
    toks.expect(":");
  }
  std::vector<std::pair<int, Rational>> objTerms;
  int sign = 1;
  while (!toks.done() && toks.peek() != "Subject") {
    std::string tok = toks.take();
    if (tok == "+") {
      sign = 1;
      continue;
    }
    if (tok == "-") {
      sign = -1;
      continue;
    }
    Rational coeff = 1;
    std::string nameTok = tok;
    if (is_number_start(tok)) {
      coeff = parse_rational(tok);
      nameTok = toks.take();
    }
    objTerms.emplace_back(var_of(nameTok), sign * coeff);
    sign = 1;
  }
  toks.expect("Subject");
  toks.expect("To");

  while (!toks.done() && toks.peek() != "Bounds") {
    LpModel::LpRow row;
    row.name = toks.take();
    toks.expect(":");
    int rowSign = 1;
    while (toks.peek() != "=") {
      std::string tok = toks.take();
      if (tok == "+") {
        rowSign = 1;
        continue;
      }
      if (tok == "-") {
        rowSign = -1;
        continue;
      }
      Rational coeff = 1;
      std::string nameTok = tok;
      if (is_number_start(tok)) {
        coeff = parse_rational(tok);
        nameTok = toks.take();
      }
      if (coeff != 0) row.terms.emplace_back(var_of(nameTok), rowSign * coeff);
      rowSign = 1;
    }
    toks.expect("=");
    row.rhs = parse_number(toks);
    model.rows.push_back(std::move(row));
  }
  toks.expect("Bounds");

  std::vector<std::pair<Rational, Rational>> boundsByVar(model.varNames.size(),
                                                         {Rational(0), Rational(1)});
  std::vector<std::string> boundOrder;
  while (!toks.done() && toks.peek() != "End") {
    Rational lo = parse_number(toks);
    toks.expect("<=");
    std::string name = toks.take();
    toks.expect("<=");
    Rational hi = parse_number(toks);
    int idx = var_of(name);
    if (static_cast<size_t>(idx) >= boundsByVar.size())
      boundsByVar.resize(static_cast<size_t>(idx) + 1, {Rational(0), Rational(1)});
    boundsByVar[static_cast<size_t>(idx)] = {lo, hi};
    boundOrder.push_back(name);
  }
  toks.expect("End");

  // Canonical variable order is the Bounds order (every variable appears
  // there); remap terms accordingly so structural equality is meaningful.
  if (boundOrder.size() == model.varNames.size()) {
    std::map<std::string, int> newIndex;
    for (size_t i = 0; i < boundOrder.size(); ++i) newIndex.emplace(boundOrder[i], static_cast<int>(i));
    if (newIndex.size() == model.varNames.size()) {
      std::vector<int> remap(model.varNames.size());
      for (size_t i = 0; i < model.varNames.size(); ++i) remap[i] = newIndex.at(model.varNames[i]);
      std::vector<std::pair<Rational, Rational>> newBounds(model.varNames.size());
      for (size_t i = 0; i < model.varNames.size(); ++i)
        newBounds[static_cast<size_t>(remap[i])] = boundsByVar[i];
      for (auto& row : model.rows)
        for (auto& [var, coeff] : row.terms) var = remap[static_cast<size_t>(var)];
      for (auto& [var, coeff] : objTerms) var = remap[static_cast<size_t>(var)];
      model.varNames = boundOrder;
      boundsByVar = std::move(newBounds);
    }
  }

  model.bounds = std::move(boundsByVar);
  model.objective.assign(model.varNames.size(), Rational(0));
  for (const auto& [var, coeff] : objTerms) model.objective[static_cast<size_t>(var)] += coeff;
  return model;
}

LpModel parse_lp_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open LP file " + path.string());
  return parse_lp(in);
}

}  // namespace dikeopt
