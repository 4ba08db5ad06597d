#include "richss/render.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

#include "richss/weyl.hpp"

namespace richss::render {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> weight_entries(const Weight& w) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (const Rational& c : w) out.push_back(c.str());
  return out;
}

ordered_json entry_json(const ExtremalEntry& e) {
  ordered_json j;
  j["family"] = family_name(e.label.family);
  j["tuple"] = e.label.tuple;
  j["window"] = e.element;
  j["weight_root_basis"] = weight_entries(e.weight);
  return j;
}

std::string paren(const std::string& inner) { return "(" + inner + ")"; }

}  // namespace

std::string window_str(const SignedPerm& s) {
  std::string out;
  for (size_t k = 0; k < s.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(s[k]);
  }
  return out;
}

std::string weight_str(const Weight& w) {
  std::string out = "(";
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) out += ',';
    out += w[k].str();
  }
  return out + ")";
}

SignedPerm parse_window(const RootSystem& rs, const std::string& text) {
  std::string cleaned;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ' && c != '\t') cleaned += c;
  SignedPerm s;
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int x = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      s.push_back(x);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_window: bad entry '" + item + "'");
    }
  }
  if (static_cast<int>(s.size()) != rs.rank())
    throw std::invalid_argument("parse_window: expected " +
                                std::to_string(rs.rank()) + " entries, got " +
                                std::to_string(s.size()));
  if (!is_valid_window(s))
    throw std::invalid_argument("parse_window: '" + text +
                                "' is not a window for " + rs.name());
  if (rs.type() == LieType::D && !is_d_element(s))
    throw std::invalid_argument("parse_window: '" + text +
                                "' has an odd sign count, not in " + rs.name());
  return s;
}

std::vector<int> parse_word(const std::string& text) {
  std::string cleaned;
  for (char c : text) cleaned += (c == ',' ? ' ' : c);
  std::vector<int> word;
  std::stringstream ss(cleaned);
  std::string tok;
  while (ss >> tok) {
    if (tok[0] == 's' || tok[0] == 'S') tok = tok.substr(1);
    try {
      size_t used = 0;
      int k = std::stoi(tok, &used);
      if (used != tok.size() || k < 1) throw std::invalid_argument(tok);
      word.push_back(k);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_word: bad letter '" + tok + "'");
    }
  }
  return word;
}

std::string classify_markdown(const RootSystem& rs, int r) {
  const std::string omega = "omega_" + std::to_string(r);
  std::ostringstream os;
  os << rs.name() << ", r = " << r << "\n";
  os << omega << " = " << weight_str(rs.fundamental_weight(r)) << "\n\n";
  os << "| label | v | v(" << omega << ") | w(" << omega << ") | w |\n";
  os << "| --- | --- | --- | --- | --- |\n";
  for (const auto& [ve, we] : matched_pairs(rs, r)) {
    os << "| " << ve.label.str() << " | " << paren(window_str(ve.element))
       << " | " << weight_str(ve.weight) << " | " << weight_str(we.weight)
       << " | " << paren(window_str(we.element)) << " |\n";
  }
  return os.str();
}

std::string classify_csv(const RootSystem& rs, int r) {
  std::ostringstream os;
  os << "label,v,v_weight,w_weight,w\n";
  for (const auto& [ve, we] : matched_pairs(rs, r)) {
    os << '"' << ve.label.str() << "\",\"" << paren(window_str(ve.element))
       << "\",\"" << weight_str(ve.weight) << "\",\"" << weight_str(we.weight)
       << "\",\"" << paren(window_str(we.element)) << "\"\n";
  }
  return os.str();
}

std::string classify_json(const RootSystem& rs, int r) {
  ordered_json j;
  j["type"] = std::string(1, lie_type_char(rs.type()));
  j["n"] = rs.rank();
  j["r"] = r;
  j["omega"] = weight_entries(rs.fundamental_weight(r));
  j["pairs"] = ordered_json::array();
  for (const auto& [ve, we] : matched_pairs(rs, r)) {
    ordered_json row;
    row["label"] = ve.label.str();
    row["v"] = entry_json(ve);
    row["w"] = entry_json(we);
    j["pairs"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

std::string verdict_json(const RichardsonPair& pair,
                         const PairVerdict& verdict) {
  const RootSystem& rs = pair.ctx.rs;
  ordered_json j;
  j["pair"] = {
      {"type", std::string(1, lie_type_char(rs.type()))},
      {"n", rs.rank()},
      {"r", pair.ctx.r},
      {"v", pair.v},
      {"w", pair.w},
  };
  j["richardson_nonempty"] = verdict.richardson_nonempty;
  j["semistable"] = verdict.semistable ? "yes" : "no";
  if (verdict.reason) {
    j["reason"] = *verdict.reason == NoReason::NecessaryFails
                      ? "necessary_fails"
                      : "no_zero_sum_chain";
  }
  if (verdict.certificate) {
    j["certificate"] = ordered_json::array();
    j["certificate_weights"] = ordered_json::array();
    for (const SignedPerm& u : verdict.certificate->chain)
      j["certificate"].push_back(u);
    for (const Weight& wt : verdict.certificate->weights)
      j["certificate_weights"].push_back(weight_entries(wt));
  }
  j["derived_rule"] = verdict_uses_derived_rule(pair);
  return j.dump(2) + "\n";
}

}  // namespace richss::render
