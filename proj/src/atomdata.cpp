#include "photocorr/atomdata.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "photocorr/numerics.hpp"

namespace photocorr {

std::string_view to_string(Provenance p) {
  switch (p) {
  case Provenance::PaperTable:
    return "paper-table";
  case Provenance::Derived:
    return "derived";
  case Provenance::User:
    return "user";
  }
  return "user";
}

std::optional<Provenance> provenance_from_string(std::string_view s) {
  if (s == "paper-table")
    return Provenance::PaperTable;
  if (s == "derived")
    return Provenance::Derived;
  if (s == "user")
    return Provenance::User;
  return std::nullopt;
}

int AtomRecord::n_h() const {
  int best = 0;
  for (const auto &s : shells)
    if (s.ell == 0 && s.occupancy > 0)
      best = std::max(best, s.n);
  if (best == 0)
    throw DataError("atom " + symbol + ": no occupied s shell");
  return best;
}

double AtomRecord::delta_h_value() const {
  if (delta_h)
    return *delta_h;
  const int nh = n_h();
  const auto it = norm_sq_s.find(nh);
  if (it == norm_sq_s.end())
    throw DataError("atom " + symbol + ": no defect and no normsq for n_h");
  return defect_from_normalization(it->second, z, nh);
}

DefectModel AtomRecord::defect_model() const {
  if (!delta_inf)
    throw DataError("atom " + symbol + ": asymptotic defect missing");
  DefectModel m{delta_h_value(), *delta_inf, n_h(), z};
  m.validate();
  return m;
}

double AtomRecord::e_np_hartree(int n) const {
  const auto it = e_np_ev.find(n);
  if (it == e_np_ev.end())
    throw DataError("atom " + symbol + ": no np binding energy for n=" +
                    std::to_string(n));
  return ev_to_hartree(it->second);
}

Provenance AtomRecord::provenance_of(const std::string &field) const {
  const auto it = provenance.find(field);
  return it == provenance.end() ? Provenance::User : it->second;
}

void AtomRecord::validate() const {
  auto fail = [&](const std::string &what) {
    throw DataError("atom " + symbol + ": " + what);
  };
  if (symbol.empty())
    fail("empty symbol");
  if (!(z > 0.0))
    fail("Z must be positive");
  std::set<std::pair<int, int>> seen;
  for (const auto &s : shells) {
    if (s.n < 1 || s.ell < 0 || s.ell >= s.n)
      fail("invalid shell quantum numbers");
    if (s.occupancy < 0 || s.occupancy > 2 * (2 * s.ell + 1))
      fail("occupancy exceeds 2(2l+1)");
    if (!seen.insert({s.n, s.ell}).second)
      fail("duplicate shell");
    if (s.binding_energy_ev && !(*s.binding_energy_ev < 0.0))
      fail("shell binding energy must be negative");
  }
  for (const auto &[n, v] : norm_sq_s)
    if (!(v > 0.0))
      fail("normsq must be positive");
  for (const auto &[n, v] : norm_ratio)
    if (!(v > 0.0))
      fail("normratio must be positive");
  for (const auto &[n, v] : e_np_ev)
    if (!(v < 0.0))
      fail("enp must be negative");
}

namespace {

const std::set<std::string, std::less<>> kFields = {"shell", "normsq",
                                                    "normratio", "defect", "enp"};

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i >= line.size())
      break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

std::optional<double> parse_real(std::string_view s) {
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    return std::nullopt;
  return v;
}

std::optional<int> parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    return std::nullopt;
  return v;
}

class Parser {
public:
  ParseResult run(std::string_view text) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos)
        end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      ++line_no;
      if (!line.empty() && line.back() == '\r')
        line.remove_suffix(1);
      const std::size_t hash = line.find('#');
      if (hash != std::string_view::npos)
        line = line.substr(0, hash);
      statement(line_no, tokenize(line));
      if (end == text.size())
        break;
      pos = end + 1;
    }
    finish();
    return std::move(result_);
  }

private:
  struct Fields {
    std::map<std::string_view, Token> values;
    bool ok = true;
  };

  void error(int col, std::string msg) {
    result_.errors.push_back({line_, col, std::move(msg)});
    if (current_)
      current_bad_ = true;
  }

  void finish() {
    if (current_ && !current_bad_)
      result_.records.push_back(std::move(*current_));
    current_.reset();
    current_bad_ = false;
  }

  // key=value tokens; unknown or repeated keys are errors.
  Fields key_values(const std::vector<Token> &toks, std::size_t first,
                    std::initializer_list<std::string_view> allowed) {
    Fields f;
    for (std::size_t i = first; i < toks.size(); ++i) {
      const auto eq = toks[i].text.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        error(toks[i].column, "expected key=value, got '" +
                                  std::string(toks[i].text) + "'");
        f.ok = false;
        continue;
      }
      const std::string_view key = toks[i].text.substr(0, eq);
      const Token value{toks[i].text.substr(eq + 1), toks[i].column + int(eq) + 1};
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        error(toks[i].column, "unknown key '" + std::string(key) + "'");
        f.ok = false;
        continue;
      }
      if (!f.values.emplace(key, value).second) {
        error(toks[i].column, "repeated key '" + std::string(key) + "'");
        f.ok = false;
      }
    }
    return f;
  }

  std::optional<double> real(const Fields &f, std::string_view key, int stmt_col,
                             bool required = true) {
    const auto it = f.values.find(key);
    if (it == f.values.end()) {
      if (required)
        error(stmt_col, "missing " + std::string(key) + "=");
      return std::nullopt;
    }
    auto v = parse_real(it->second.text);
    if (!v)
      error(it->second.column, "invalid number '" + std::string(it->second.text) + "'");
    return v;
  }

  std::optional<int> integer(const Fields &f, std::string_view key, int stmt_col) {
    const auto it = f.values.find(key);
    if (it == f.values.end()) {
      error(stmt_col, "missing " + std::string(key) + "=");
      return std::nullopt;
    }
    auto v = parse_int(it->second.text);
    if (!v)
      error(it->second.column, "invalid integer '" + std::string(it->second.text) + "'");
    return v;
  }

  int col(const Fields &f, std::string_view key, int fallback) const {
    const auto it = f.values.find(key);
    return it == f.values.end() ? fallback : it->second.column;
  }

  void statement(int line_no, const std::vector<Token> &toks) {
    line_ = line_no;
    if (toks.empty())
      return;
    const std::string_view kw = toks[0].text;
    const int c0 = toks[0].column;
    if (kw == "atom") {
      finish();
      atom(toks);
      return;
    }
    if (!current_) {
      error(c0, "statement outside an atom record");
      return;
    }
    AtomRecord &rec = *current_;
    if (kw == "shell") {
      const Fields f = key_values(toks, 1, {"n", "l", "occ", "E"});
      const auto n = integer(f, "n", c0);
      const auto l = integer(f, "l", c0);
      const auto occ = integer(f, "occ", c0);
      const auto e = real(f, "E", c0, false);
      if (!f.ok || !n || !l || !occ || (f.values.count("E") && !e))
        return;
      if (*n < 1 || *l < 0 || *l >= *n) {
        error(col(f, "l", c0), "invalid shell n=" + std::to_string(*n) +
                                   " l=" + std::to_string(*l));
        return;
      }
      if (*occ < 0 || *occ > 2 * (2 * *l + 1)) {
        error(col(f, "occ", c0), "occupancy exceeds 2(2l+1)");
        return;
      }
      if (e && !(*e < 0.0)) {
        error(col(f, "E", c0), "binding energy must be negative");
        return;
      }
      for (const auto &s : rec.shells)
        if (s.n == *n && s.ell == *l) {
          error(c0, "duplicate shell n=" + std::to_string(*n) +
                        " l=" + std::to_string(*l));
          return;
        }
      rec.shells.push_back({*n, *l, *occ, e});
    } else if (kw == "normsq" || kw == "normratio") {
      const Fields f = key_values(toks, 1, {"n", "value"});
      const auto n = integer(f, "n", c0);
      const auto v = real(f, "value", c0);
      if (!f.ok || !n || !v)
        return;
      if (!(*v > 0.0)) {
        error(col(f, "value", c0), std::string(kw) + " must be positive");
        return;
      }
      auto &target = kw == "normsq" ? rec.norm_sq_s : rec.norm_ratio;
      if (!target.emplace(*n, *v).second)
        error(c0, "duplicate " + std::string(kw) + " for n=" + std::to_string(*n));
    } else if (kw == "defect") {
      const Fields f = key_values(toks, 1, {"h", "inf"});
      const auto h = real(f, "h", c0, false);
      const auto inf = real(f, "inf", c0);
      if (!f.ok || !inf || (f.values.count("h") && !h))
        return;
      if (rec.delta_inf) {
        error(c0, "duplicate defect line");
        return;
      }
      rec.delta_h = h;
      rec.delta_inf = inf;
    } else if (kw == "enp") {
      const Fields f = key_values(toks, 1, {"n", "E"});
      const auto n = integer(f, "n", c0);
      const auto e = real(f, "E", c0);
      if (!f.ok || !n || !e)
        return;
      if (!(*e < 0.0)) {
        error(col(f, "E", c0), "enp energy must be negative");
        return;
      }
      if (!rec.e_np_ev.emplace(*n, *e).second)
        error(c0, "duplicate enp for n=" + std::to_string(*n));
    } else if (kw == "prov") {
      if (toks.size() < 2) {
        error(c0, "prov needs field=tag");
        return;
      }
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const auto eq = toks[i].text.find('=');
        const std::string_view field =
            eq == std::string_view::npos ? toks[i].text : toks[i].text.substr(0, eq);
        if (eq == std::string_view::npos || !kFields.count(field)) {
          error(toks[i].column, "unknown key '" + std::string(field) + "'");
          continue;
        }
        const auto tag = provenance_from_string(toks[i].text.substr(eq + 1));
        if (!tag) {
          error(toks[i].column + int(eq) + 1,
                "unknown provenance '" + std::string(toks[i].text.substr(eq + 1)) + "'");
          continue;
        }
        rec.provenance[std::string(field)] = *tag;
      }
    } else {
      error(c0, "unknown statement '" + std::string(kw) + "'");
    }
  }

  void atom(const std::vector<Token> &toks) {
    const int c0 = toks[0].column;
    current_.emplace();
    current_bad_ = false;
    if (toks.size() < 3) {
      error(c0, "expected 'atom <symbol> Z=<number>'");
      return;
    }
    const std::string_view sym = toks[1].text;
    const bool sym_ok = sym.size() <= 3 && std::all_of(sym.begin(), sym.end(), [](char ch) {
                          return std::isalpha(static_cast<unsigned char>(ch));
                        });
    if (!sym_ok) {
      error(toks[1].column, "invalid element symbol '" + std::string(sym) + "'");
      return;
    }
    current_->symbol = std::string(sym);
    const Fields f = key_values(toks, 2, {"Z"});
    const auto z = real(f, "Z", c0);
    if (!f.ok || !z)
      return;
    if (!(*z > 0.0)) {
      error(col(f, "Z", c0), "Z must be positive");
      return;
    }
    current_->z = *z;
  }

  ParseResult result_;
  std::optional<AtomRecord> current_;
  bool current_bad_ = false;
  int line_ = 0;
};

std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

} // namespace

ParseResult parse_atom_file(std::string_view text) {
  try {
    return Parser().run(text);
  } catch (const std::exception &e) {
    ParseResult r;
    r.errors.push_back({0, 0, std::string("internal parser failure: ") + e.what()});
    return r;
  }
}

std::vector<AtomRecord> parse_atom_file_or_throw(std::string_view text) {
  ParseResult r = parse_atom_file(text);
  if (!r.ok()) {
    std::ostringstream msg;
    for (const auto &e : r.errors)
      msg << "line " << e.line << ", column " << e.column << ": " << e.message
          << '\n';
    throw DataError(msg.str());
  }
  return std::move(r.records);
}

std::string serialize(const std::vector<AtomRecord> &records) {
  std::ostringstream out;
  bool first = true;
  for (const auto &r : records) {
    if (!first)
      out << '\n';
    first = false;
    out << "atom " << r.symbol << " Z=" << num(r.z) << '\n';
    for (const auto &s : r.shells) {
      out << "  shell n=" << s.n << " l=" << s.ell << " occ=" << s.occupancy;
      if (s.binding_energy_ev)
        out << " E=" << num(*s.binding_energy_ev);
      out << '\n';
    }
    for (const auto &[n, v] : r.norm_sq_s)
      out << "  normsq n=" << n << " value=" << num(v) << '\n';
    for (const auto &[n, v] : r.norm_ratio)
      out << "  normratio n=" << n << " value=" << num(v) << '\n';
    if (r.delta_inf) {
      out << "  defect";
      if (r.delta_h)
        out << " h=" << num(*r.delta_h);
      out << " inf=" << num(*r.delta_inf) << '\n';
    }
    for (const auto &[n, v] : r.e_np_ev)
      out << "  enp n=" << n << " E=" << num(v) << '\n';
    for (const auto &[field, tag] : r.provenance)
      out << "  prov " << field << '=' << to_string(tag) << '\n';
  }
  return out.str();
}

const std::vector<AtomRecord> &builtin_dataset() {
  static const std::vector<AtomRecord> data = [] {
    auto recs = parse_atom_file_or_throw(builtin_dataset_text());
    for (const auto &r : recs)
      r.validate();
    return recs;
  }();
  return data;
}

std::vector<AtomRecord> load_dataset(const std::optional<std::string> &path) {
  std::optional<std::string> file = path;
  if (!file) {
    if (const char *env = std::getenv("PHOTOCORR_DATA"); env && *env)
      file = env;
  }
  if (!file)
    return builtin_dataset();
  std::ifstream in(*file, std::ios::binary);
  if (!in)
    throw DataError("cannot open dataset '" + *file + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    auto recs = parse_atom_file_or_throw(buf.str());
    for (const auto &r : recs)
      r.validate();
    return recs;
  } catch (const DataError &e) {
    throw DataError(*file + ":\n" + e.what());
  }
}

} // namespace photocorr
