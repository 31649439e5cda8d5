#include "qweyl/weyl/words.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qweyl::weyl {

bool GroupWord::anti() const {
  bool a = false;
  for (const auto& l : letters) a = a != l.anti;
  return a;
}

std::string GroupWord::label() const {
  if (names.empty()) return "id";
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? " " : "") + names[i];
  return s;
}

GroupWord make_word(const ActionFamily& f, const std::vector<std::string>& names) {
  GroupWord w;
  for (const auto& n : names) {
    auto m = f.macros.find(n);
    if (m != f.macros.end()) {
      GroupWord sub = make_word(f, m->second);
      w = concat(w, sub);
      continue;
    }
    w.names.push_back(n);
    w.letters.push_back(f.letter(n));
  }
  return w;
}

GroupWord parse_word(const ActionFamily& f, const std::string& text) {
  std::vector<std::string> known;
  for (const auto& [n, e] : f.letters) known.push_back(n);
  for (const auto& [n, w] : f.macros) known.push_back(n);
  std::sort(known.begin(), known.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<std::string> names;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*' || text[i] == ',') {
      ++i;
      continue;
    }
    bool hit = false;
    for (const auto& k : known) {
      if (text.compare(i, k.size(), k) != 0) continue;
      std::size_t end = i + k.size();
      // "s1" must not swallow the start of a longer token such as "s12"
      if (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])) &&
          std::isdigit(static_cast<unsigned char>(k.back())))
        continue;
      names.push_back(k);
      i = end;
      hit = true;
      break;
    }
    if (!hit)
      throw std::invalid_argument("unknown letter at position " + std::to_string(i) + " in word '" + text + "'");
  }
  return make_word(f, names);
}

GroupWord inverse_word(const ActionFamily& f, const GroupWord& w) {
  std::vector<std::string> names;
  for (auto it = w.names.rbegin(); it != w.names.rend(); ++it) {
    auto inv = f.inverse_of.find(*it);
    if (inv == f.inverse_of.end()) throw std::invalid_argument("letter '" + *it + "' has no inverse");
    names.push_back(inv->second);
  }
  return make_word(f, names);
}

GroupWord concat(const GroupWord& a, const GroupWord& b) {
  GroupWord r = a;
  r.names.insert(r.names.end(), b.names.begin(), b.names.end());
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

GroupWord power(const GroupWord& w, int k) {
  if (k < 0) throw std::invalid_argument("negative word power");
  GroupWord r;
  for (int i = 0; i < k; ++i) r = concat(r, w);
  return r;
}

Expr apply_word(const GroupWord& w, const Expr& e) {
  Expr r = e;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = substitute(r, *it);
  return r;
}

Endomorphism word_endomorphism(const GroupWord& w, const SystemPtr& sys) {
  Endomorphism r = Endomorphism::identity(sys);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = compose(*it, r);
  if (r.anti != w.anti()) throw std::logic_error("parity bookkeeping mismatch in " + w.label());
  r.name = w.label();
  return r;
}

}  // namespace qweyl::weyl
