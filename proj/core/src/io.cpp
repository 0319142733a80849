#include "axial/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "axial/error.hpp"

namespace axial {

namespace {

struct Line {
  int number;
  std::vector<std::string> tok;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    Line l{no, {}};
    std::string t;
    while (ls >> t) l.tok.push_back(t);
    if (!l.tok.empty()) out.push_back(std::move(l));
  }
  return out;
}

Rat rat_at(const Line& l, std::size_t i) {
  try {
    return parse_rat(l.tok.at(i));
  } catch (const std::out_of_range&) {
    throw ValidationError("missing value", l.number);
  } catch (const ValidationError& e) {
    throw ValidationError(e.what(), l.number);
  }
}

std::size_t index_at(const Line& l, std::size_t i, std::size_t n) {
  if (i >= l.tok.size()) throw ValidationError("missing index", l.number);
  const std::string& s = l.tok[i];
  if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) throw ValidationError("bad index '" + s + "'", l.number);
  const std::size_t k = std::stoul(s);
  if (k == 0 || k > n) throw ValidationError("index " + s + " out of range 1.." + std::to_string(n), l.number);
  return k - 1;
}

// Parses the body of a law section starting after its header; pos ends past "end".
FusionLaw parse_law_body(const std::vector<Line>& lines, std::size_t& pos, const std::string& name, int header_line) {
  std::vector<Rat> values;
  std::vector<std::pair<int, std::vector<Rat>>> stars;  // line, (a b c...)
  bool ended = false;
  for (; pos < lines.size(); ++pos) {
    const Line& l = lines[pos];
    if (l.tok[0] == "end") {
      ended = true;
      ++pos;
      break;
    }
    if (l.tok[0] == "values") {
      for (std::size_t i = 1; i < l.tok.size(); ++i) values.push_back(rat_at(l, i));
    } else if (l.tok[0] == "star") {
      if (l.tok.size() < 4 || l.tok[3] != ":") throw ValidationError("expected 'star a b : values'", l.number);
      std::vector<Rat> row{rat_at(l, 1), rat_at(l, 2)};
      for (std::size_t i = 4; i < l.tok.size(); ++i) row.push_back(rat_at(l, i));
      stars.emplace_back(l.number, std::move(row));
    } else {
      throw ValidationError("unexpected '" + l.tok[0] + "' in law section", l.number);
    }
  }
  if (!ended) throw ValidationError("law section has no 'end'", header_line);
  if (values.empty()) throw ValidationError("law section has no values", header_line);
  const std::size_t m = values.size();
  auto idx = [&](const Rat& v, int line) {
    auto it = std::find(values.begin(), values.end(), v);
    if (it == values.end()) throw ValidationError("value " + to_string(v) + " is not in the law", line);
    return static_cast<std::size_t>(it - values.begin());
  };
  std::vector<std::vector<std::vector<Rat>>> table(m, std::vector<std::vector<Rat>>(m));
  for (const auto& [line, row] : stars) {
    const std::size_t a = idx(row[0], line), b = idx(row[1], line);
    std::vector<Rat> set(row.begin() + 2, row.end());
    for (const Rat& v : set) idx(v, line);
    table[a][b] = set;
    table[b][a] = set;
  }
  try {
    return FusionLaw(values, table, name);
  } catch (const Error& e) {
    throw ValidationError(e.what(), header_line);
  }
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AlgebraFile parse_algebra(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty() || lines[0].tok[0] != "axial-algebra")
    throw ValidationError("missing 'axial-algebra' header", lines.empty() ? 0 : lines[0].number);
  if (lines[0].tok.size() != 2 || lines[0].tok[1] != "1")
    throw ValidationError("unsupported format version", lines[0].number);

  AlgebraFile f;
  std::optional<AlgebraBuilder> b;
  std::size_t n = 0;
  int gram_line = 0, unit_line = 0, build_line = lines.back().number;
  std::vector<std::pair<int, std::vector<std::string>>> pending_axes;
  std::optional<Mat> gram;

  std::size_t pos = 1;
  auto need_dim = [&](const Line& l) {
    if (!b) throw ValidationError("'" + l.tok[0] + "' before 'dim'", l.number);
  };
  while (pos < lines.size()) {
    const Line& l = lines[pos];
    const std::string& key = l.tok[0];
    if (key == "name") {
      if (l.tok.size() != 2) throw ValidationError("expected 'name LABEL'", l.number);
      f.name = l.tok[1];
      ++pos;
    } else if (key == "dim") {
      if (b) throw ValidationError("repeated 'dim'", l.number);
      if (l.tok.size() != 2) throw ValidationError("expected 'dim N'", l.number);
      const std::string& s = l.tok[1];
      if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) throw ValidationError("bad dimension", l.number);
      n = std::stoul(s);
      b.emplace(n);
      ++pos;
    } else if (key == "labels") {
      need_dim(l);
      if (l.tok.size() != n + 1) throw ValidationError("expected " + std::to_string(n) + " labels", l.number);
      b->set_labels(std::vector<std::string>(l.tok.begin() + 1, l.tok.end()));
      ++pos;
    } else if (key == "products") {
      need_dim(l);
      const int head = l.number;
      bool ended = false;
      for (++pos; pos < lines.size(); ++pos) {
        const Line& p = lines[pos];
        if (p.tok[0] == "end") {
          ended = true;
          ++pos;
          break;
        }
        if (p.tok.size() != 4) throw ValidationError("expected 'i j k value'", p.number);
        std::size_t i = index_at(p, 0, n), j = index_at(p, 1, n);
        const std::size_t k = index_at(p, 2, n);
        if (i > j) std::swap(i, j);
        try {
          b->set_constant(i, j, k, rat_at(p, 3));
        } catch (const ValidationError& e) {
          throw ValidationError(e.what(), p.number);
        }
      }
      if (!ended) throw ValidationError("products section has no 'end'", head);
    } else if (key == "gram") {
      need_dim(l);
      gram_line = l.number;
      Mat g(n, n);
      std::size_t row = 0;
      bool ended = false;
      for (++pos; pos < lines.size(); ++pos) {
        const Line& p = lines[pos];
        if (p.tok[0] == "end") {
          ended = true;
          ++pos;
          break;
        }
        if (row >= n) throw ValidationError("too many Gram rows", p.number);
        if (p.tok.size() != row + 1)
          throw ValidationError("Gram row " + std::to_string(row + 1) + " needs " + std::to_string(row + 1) + " entries",
                                p.number);
        for (std::size_t c = 0; c <= row; ++c) g(row, c) = g(c, row) = rat_at(p, c);
        ++row;
      }
      if (!ended) throw ValidationError("gram section has no 'end'", gram_line);
      if (row != n) throw ValidationError("Gram matrix has " + std::to_string(row) + " rows", gram_line);
      gram = g;
    } else if (key == "unit") {
      need_dim(l);
      unit_line = l.number;
      if (l.tok.size() != n + 1) throw ValidationError("unit needs " + std::to_string(n) + " entries", l.number);
      Vec u(n);
      for (std::size_t i = 0; i < n; ++i) u[i] = rat_at(l, i + 1);
      b->set_unit(u);
      ++pos;
    } else if (key == "axes") {
      need_dim(l);
      const int head = l.number;
      bool ended = false;
      for (++pos; pos < lines.size(); ++pos) {
        const Line& p = lines[pos];
        if (p.tok[0] == "end") {
          ended = true;
          ++pos;
          break;
        }
        if (p.tok.size() != n + 1) throw ValidationError("axis needs a law tag and " + std::to_string(n) + " entries", p.number);
        AxisRecord rec;
        rec.law_tag = p.tok[0];
        for (std::size_t i = 0; i < n; ++i) rec.vector.push_back(rat_at(p, i + 1));
        f.axes.push_back(std::move(rec));
      }
      if (!ended) throw ValidationError("axes section has no 'end'", head);
    } else if (key == "law") {
      const std::string name = l.tok.size() > 1 ? l.tok[1] : "custom";
      ++pos;
      f.law = parse_law_body(lines, pos, name, l.number);
    } else {
      throw ValidationError("unknown keyword '" + key + "'", l.number);
    }
  }
  if (!b) throw ValidationError("missing 'dim'", build_line);
  if (gram) b->set_gram(*gram);
  try {
    f.algebra = b->build();
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    int line = build_line;
    if (what.find("Gram") != std::string::npos || what.find("Frobenius") != std::string::npos) line = gram_line;
    if (what.find("unit") != std::string::npos) line = unit_line;
    throw ValidationError(what, line);
  }
  for (const auto& ax : f.axes)
    if (ax.law_tag == "custom" && !f.law) throw ValidationError("axis uses the custom law but the file has none");
  return f;
}

AlgebraFile read_algebra_file(const std::string& path) { return parse_algebra(read_text_file(path)); }

std::string emit_law(const FusionLaw& law) {
  std::ostringstream o;
  o << "law " << (law.name().empty() ? "custom" : law.name()) << "\nvalues";
  for (const Rat& v : law.values()) o << ' ' << to_string(v);
  o << '\n';
  for (std::size_t i = 0; i < law.size(); ++i)
    for (std::size_t j = i; j < law.size(); ++j) {
      o << "star " << to_string(law.values()[i]) << ' ' << to_string(law.values()[j]) << " :";
      for (const Rat& v : law.mask_values(law.star(i, j))) o << ' ' << to_string(v);
      o << '\n';
    }
  o << "end\n";
  return o.str();
}

std::string emit_algebra(const AlgebraFile& f) {
  const Algebra& a = f.algebra;
  const std::size_t n = a.dim();
  std::ostringstream o;
  o << "axial-algebra 1\n";
  if (f.name) o << "name " << *f.name << '\n';
  o << "dim " << n << '\n';
  if (!a.labels().empty()) {
    o << "labels";
    for (const auto& s : a.labels()) o << ' ' << s;
    o << '\n';
  }
  o << "products\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (const auto& [k, g] : a.constants(i, j)) o << i + 1 << ' ' << j + 1 << ' ' << k + 1 << ' ' << to_string(g) << '\n';
  o << "end\n";
  if (a.gram()) {
    o << "gram\n";
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c <= r; ++c) o << (c ? " " : "") << to_string((*a.gram())(r, c));
      o << '\n';
    }
    o << "end\n";
  }
  if (a.unit()) {
    o << "unit";
    for (const Rat& x : *a.unit()) o << ' ' << to_string(x);
    o << '\n';
  }
  if (!f.axes.empty()) {
    o << "axes\n";
    for (const auto& ax : f.axes) {
      o << ax.law_tag;
      for (const Rat& x : ax.vector) o << ' ' << to_string(x);
      o << '\n';
    }
    o << "end\n";
  }
  if (f.law) o << emit_law(*f.law);
  return o.str();
}

std::string emit_algebra(const Algebra& alg) {
  AlgebraFile f;
  f.algebra = alg;
  return emit_algebra(f);
}

FusionLaw parse_law_text(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  std::size_t pos = 0;
  std::string name = "custom";
  int header = lines.empty() ? 0 : lines[0].number;
  if (!lines.empty() && lines[0].tok[0] == "law") {
    if (lines[0].tok.size() > 1) name = lines[0].tok[1];
    pos = 1;
  }
  FusionLaw law = parse_law_body(lines, pos, name, header);
  if (pos != lines.size()) throw ValidationError("text after the law section", lines[pos].number);
  return law;
}

FusionLaw parse_law_spec(const std::string& spec, const std::optional<FusionLaw>& file_law) {
  auto parts = [&] {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : spec) {
      if (ch == ':') {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    out.push_back(cur);
    return out;
  }();
  if (parts[0] == "m" && parts.size() == 3) return FusionLaw::monster(parse_rat(parts[1]), parse_rat(parts[2]));
  if (parts[0] == "j" && parts.size() == 2) return FusionLaw::jordan(parse_rat(parts[1]));
  if (spec == "assoc") return FusionLaw::associative();
  if (spec == "custom") {
    if (!file_law) throw ValidationError("law 'custom' requested but no law section was given");
    return *file_law;
  }
  if (file_law && spec == file_law->name()) return *file_law;
  return parse_law_text(read_text_file(spec));
}

std::vector<Axis> load_axes(const AlgebraFile& f) {
  std::vector<Axis> out;
  for (std::size_t i = 0; i < f.axes.size(); ++i) {
    const FusionLaw law = parse_law_spec(f.axes[i].law_tag, f.law);
    AxisCheck c = check_axis(f.algebra, f.axes[i].vector, law, false);
    if (!c)
      throw ValidationError("listed axis " + std::to_string(i + 1) + " fails under " + law.name() + ": " +
                            to_string(c.reason) + (c.detail.empty() ? "" : " (" + c.detail + ")"));
    out.push_back(std::move(*c.axis));
  }
  return out;
}

GroupFile parse_group(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  GroupFile g;
  std::optional<Permutation> rep;
  for (const Line& l : lines) {
    auto rest = [&] {
      std::string s;
      for (std::size_t i = 1; i < l.tok.size(); ++i) s += l.tok[i];
      return s;
    };
    try {
      if (l.tok[0] == "degree") {
        if (l.tok.size() != 2) throw ValidationError("expected 'degree N'", l.number);
        g.degree = std::stoul(l.tok[1]);
      } else if (l.tok[0] == "gen") {
        if (g.degree == 0) throw ValidationError("'gen' before 'degree'", l.number);
        g.generators.push_back(Permutation::parse_cycles(rest(), g.degree));
      } else if (l.tok[0] == "class") {
        if (g.degree == 0) throw ValidationError("'class' before 'degree'", l.number);
        rep = Permutation::parse_cycles(rest(), g.degree);
      } else {
        throw ValidationError("unknown keyword '" + l.tok[0] + "'", l.number);
      }
    } catch (const ValidationError&) {
      throw;
    } catch (const std::exception& e) {
      throw ValidationError(e.what(), l.number);
    }
  }
  if (g.generators.empty()) throw ValidationError("group file has no generators");
  if (!rep) throw ValidationError("group file has no 'class' line");
  g.representative = *rep;
  return g;
}

GroupFile read_group_file(const std::string& path) { return parse_group(read_text_file(path)); }

std::vector<PairRow> parse_pair_reference(std::string_view text) {
  std::vector<PairRow> rows;
  for (const Line& l : tokenize(text)) {
    if (l.tok[0] != "pair" || l.tok.size() < 2 || l.tok.size() % 2 != 0)
      throw ValidationError("expected 'pair LABEL key value ...'", l.number);
    PairRow r;
    r.label = l.tok[1];
    for (std::size_t i = 2; i < l.tok.size(); i += 2) {
      const std::string& k = l.tok[i];
      if (k == "dim") r.dim = std::stoul(l.tok[i + 1]);
      else if (k == "order") r.tau_order = std::stoul(l.tok[i + 1]);
      else if (k == "form") r.form = rat_at(l, i + 1);
      else if (k == "length") r.identity_length = rat_at(l, i + 1);
      else if (k == "zero") r.zero_product = l.tok[i + 1] == "1";
      else throw ValidationError("unknown key '" + k + "'", l.number);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<PairRow> read_pair_reference(const std::string& path) { return parse_pair_reference(read_text_file(path)); }

}  // namespace axial
