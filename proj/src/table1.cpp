#include "ldp/table1.hpp"

#include "ldp/error.hpp"

#include <cctype>

namespace ldp {

namespace {

// Placeholders in braces: {x}, {k+x} or {x-k} with x in {n, m, l}.
Table1Family make(int id, std::string pattern, int l_min = 0, int l_max = 0) {
  Table1Family f;
  f.id = id;
  f.uses_n = pattern.find('n') != std::string::npos;
  f.uses_m = pattern.find('m') != std::string::npos;
  f.uses_l = pattern.find('l') != std::string::npos;
  f.l_min = l_min;
  f.l_max = l_max;
  f.pattern = std::move(pattern);
  return f;
}

int value_of(char var, const Table1Params& p) {
  switch (var) {
    case 'n': return p.n;
    case 'm': return p.m;
    default: return p.l;
  }
}

int eval_placeholder(const std::string& expr, const Table1Params& p) {
  // forms: "x", "k+x", "x-k"
  if (expr.size() == 1) return value_of(expr[0], p);
  auto plus = expr.find('+');
  if (plus != std::string::npos) return std::stoi(expr.substr(0, plus)) + value_of(expr[plus + 1], p);
  auto minus = expr.find('-');
  return value_of(expr[0], p) - std::stoi(expr.substr(minus + 1));
}

std::string substitute(const std::string& pattern, const Table1Params& p) {
  std::string out;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] != '{') {
      out += pattern[i];
      continue;
    }
    auto close = pattern.find('}', i);
    out += std::to_string(eval_placeholder(pattern.substr(i + 1, close - i - 1), p));
    i = close;
  }
  return out;
}

}  // namespace

const std::vector<Table1Family>& table1_families() {
  static const std::vector<Table1Family> families = {
      make(1, "[3]"),
      make(2, "[2,4]"),
      make(3, "[2]+[3]+[5]"),
      make(4, "[2^{n}]+[{2+n};[2],[3],[5]]"),
      make(5, "[2^{n},3]+[3,{2+n},5]"),
      make(6, "[2^{n},4]+[2,{2+n},5]"),
      make(7, "[2^{n},6]+[2,{2+n},3]"),
      make(8, "[4]+[2;[2],[3],[5]]"),
      make(9, "[3,2^{m-1},3]+[{2+m};[2],[3],[5]]"),
      make(10, "[{4+l}]+[2;[2],[2^{l}],[5]]", 1, 2),
      make(11, "[{2+l},2^{m-1},4]+[{2+m};[2],[2^{l}],[5]]", 1, 2),
      make(12, "[2,5]+[2;[2],[3],[5]]"),
      make(13, "[2,3,2^{m-1},4]+[{2+m};[2],[3],[5]]"),
      make(14, "[{6+l}]+[2;[2],[3],[2^{l}]]", 1, 4),
      make(15, "[{2+l},2^{m-1},6]+[{2+m};[2],[3],[2^{l}]]", 1, 4),
      make(16, "[2^{l},7]+[2;[2],[3],[{2+l}]]", 1, 3),
      make(17, "[2^{l},3,2^{m-1},6]+[{2+m};[2],[3],[{2+l}]]", 1, 3),
      make(18, "[3,7]+[2;[2],[3],[3,2]]"),
      make(19, "[3,3,2^{m-1},6]+[{2+m};[2],[3],[3,2]]"),
      make(20, "[2,8]+[2;[2],[3],[2,3]]"),
      make(21, "[2,4,2^{m-1},6]+[{2+m};[2],[3],[2,3]]"),
  };
  return families;
}

const Table1Family& table1_family(int id) {
  const auto& fs = table1_families();
  if (id < 1 || id > static_cast<int>(fs.size())) {
    throw Error(ErrorKind::ParamOutOfRange, "family id " + std::to_string(id) + " is not in 1..21");
  }
  return fs[static_cast<std::size_t>(id - 1)];
}

std::string table1_dagger(const Table1Instance& inst) {
  const Table1Family& f = table1_family(inst.family);
  const auto& p = inst.params;
  if (f.uses_n && p.n < 0) throw Error(ErrorKind::ParamOutOfRange, "n = " + std::to_string(p.n) + " must be >= 0");
  if (f.uses_m && p.m < 1) throw Error(ErrorKind::ParamOutOfRange, "m = " + std::to_string(p.m) + " must be >= 1");
  if (f.uses_l && (p.l < f.l_min || p.l > f.l_max)) {
    throw Error(ErrorKind::ParamOutOfRange, "l = " + std::to_string(p.l) + " is outside " +
                                                std::to_string(f.l_min) + ".." + std::to_string(f.l_max) +
                                                " for family " + std::to_string(f.id));
  }
  return substitute(f.pattern, p);
}

DynkinType table1_generate(const Table1Instance& inst) {
  return parse_dynkin("2[2^4]+" + table1_dagger(inst));
}

std::vector<Table1Instance> table1_enumerate(int n_lo, int n_hi, int m_lo, int m_hi, std::optional<int> l_hi) {
  std::vector<Table1Instance> out;
  for (const auto& f : table1_families()) {
    int n_first = f.uses_n ? n_lo : 0, n_last = f.uses_n ? n_hi : 0;
    int m_first = f.uses_m ? m_lo : 1, m_last = f.uses_m ? m_hi : 1;
    int l_first = f.uses_l ? f.l_min : 1;
    int l_last = f.uses_l ? f.l_max : 1;
    if (f.uses_l && l_hi) l_last = std::min(l_last, *l_hi);
    for (int n = n_first; n <= n_last; ++n)
      for (int m = m_first; m <= m_last; ++m)
        for (int l = l_first; l <= l_last; ++l) out.push_back({f.id, {n, m, l}});
  }
  return out;
}

}  // namespace ldp
