#include "infgon/family_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <tuple>

#include "infgon/errors.hpp"

namespace infgon {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Int integer(std::string_view tok, std::size_t line) {
  Int v = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || end != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

void expect_keyword(std::string_view tok, std::string_view want, std::size_t line) {
  if (tok != want)
    throw ParseError(line, "expected '" + std::string(want) + "', got '" + std::string(tok) + "'");
}

Arc checked_arc(Int m, Int n, std::size_t line, std::string_view what) {
  Arc a{m, n};
  if (!a.valid()) throw ParseError(line, std::string(what) + " violates m <= n-2");
  return a;
}

Statement parse_statement(const std::vector<std::string_view>& t, std::size_t line) {
  Statement s;
  s.line = line;
  const auto& head = t.front();
  if (head == "arc" || head == "remove") {
    if (t.size() != 3) throw ParseError(line, "'" + std::string(head) + "' takes two integers");
    Arc a = checked_arc(integer(t[1], line), integer(t[2], line), line, head);
    if (head == "arc") {
      s.kind = Statement::Kind::Arc;
      s.orbit = Orbit::single(a);
    } else {
      s.kind = Statement::Kind::Remove;
      s.arc = a;
    }
    return s;
  }
  if (head == "orbit") {
    if (t.size() != 7 && t.size() != 9)
      throw ParseError(line, "usage: orbit M N dl DL dr DR [count K]");
    s.kind = Statement::Kind::Orbit;
    s.orbit.base = checked_arc(integer(t[1], line), integer(t[2], line), line, "orbit base");
    expect_keyword(t[3], "dl", line);
    s.orbit.step_left = integer(t[4], line);
    expect_keyword(t[5], "dr", line);
    s.orbit.step_right = integer(t[6], line);
    if (t.size() == 9) {
      expect_keyword(t[7], "count", line);
      Int k = integer(t[8], line);
      if (k < 1) throw ParseError(line, "count must be positive");
      s.orbit.count = k;
    }
    return s;
  }
  throw ParseError(line, "unknown statement '" + std::string(head) + "'");
}

// Line of the first statement that generates `a`.
std::size_t line_generating(const FamilyDocument& doc, Arc a) {
  for (const auto& s : doc.statements)
    if (s.kind != Statement::Kind::Remove && s.orbit.index_of(a)) return s.line;
  return 0;
}

}  // namespace

FamilyDocument parse_document(std::string_view text) {
  FamilyDocument doc;
  std::size_t line = 0;
  bool seen_statement = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line;

    auto t = tokens(raw);
    if (t.empty()) continue;
    if (t.front().starts_with("infgon/")) {
      if (seen_statement || t.size() != 1)
        throw ParseError(line, "the version header must be alone on the first line");
      if (t.front() != kFormatHeader)
        throw ParseError(line, "unsupported format version '" + std::string(t.front()) + "'");
      seen_statement = true;
      continue;
    }
    seen_statement = true;
    doc.statements.push_back(parse_statement(t, line));
  }
  return doc;
}

std::string write_document(const FamilyDocument& doc) {
  std::ostringstream os;
  os << doc.header << '\n';
  for (const auto& s : doc.statements) {
    switch (s.kind) {
      case Statement::Kind::Arc:
        os << "arc " << s.orbit.base.left << ' ' << s.orbit.base.right << '\n';
        break;
      case Statement::Kind::Orbit:
        os << "orbit " << s.orbit.base.left << ' ' << s.orbit.base.right << " dl "
           << s.orbit.step_left << " dr " << s.orbit.step_right;
        if (s.orbit.count) os << " count " << *s.orbit.count;
        os << '\n';
        break;
      case Statement::Kind::Remove:
        os << "remove " << s.arc.left << ' ' << s.arc.right << '\n';
        break;
    }
  }
  return os.str();
}

ArcFamily to_family(const FamilyDocument& doc) {
  ArcFamily f;
  std::vector<std::size_t> orbit_line;
  for (const auto& s : doc.statements) {
    if (s.kind == Statement::Kind::Remove) {
      f.removed.insert(s.arc);
    } else {
      f.orbits.push_back(s.orbit);
      orbit_line.push_back(s.line);
    }
  }

  const auto v = validate_family(f);
  if (std::holds_alternative<Valid>(v)) return f;

  std::size_t line = 0;
  if (auto* x = std::get_if<MalformedOrbit>(&v)) line = orbit_line[x->orbit];
  if (auto* x = std::get_if<InvalidArc>(&v)) line = orbit_line[x->orbit];
  if (auto* x = std::get_if<SelfCrossing>(&v)) line = line_generating(doc, x->second);
  if (auto* x = std::get_if<StrayRemoval>(&v)) {
    for (const auto& s : doc.statements)
      if (s.kind == Statement::Kind::Remove && s.arc == x->arc) line = s.line;
  }
  throw ParseError(line, describe(v));
}

ArcFamily parse_family(std::string_view text) { return to_family(parse_document(text)); }

std::string serialize_family(const ArcFamily& f) {
  auto key = [](const Orbit& o) {
    Int dl = o.is_single() ? 0 : o.step_left;
    Int dr = o.is_single() ? 0 : o.step_right;
    // finite counts sort before infinite ones
    return std::tuple{o.base, dl, dr, o.count.has_value() ? 0 : 1, o.count.value_or(0)};
  };
  std::vector<Orbit> orbits = f.orbits;
  std::stable_sort(orbits.begin(), orbits.end(),
                   [&](const Orbit& a, const Orbit& b) { return key(a) < key(b); });

  FamilyDocument doc;
  for (const auto& o : orbits) {
    Statement s;
    s.kind = o.is_single() ? Statement::Kind::Arc : Statement::Kind::Orbit;
    s.orbit = o;
    doc.statements.push_back(s);
  }
  for (const auto& a : f.removed) {
    Statement s;
    s.kind = Statement::Kind::Remove;
    s.arc = a;
    doc.statements.push_back(s);
  }
  return write_document(doc);
}

}  // namespace infgon
