#include "isolab/models/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "isolab/error.hpp"

namespace isolab::models {

namespace {

struct Word {
  std::string text;
  int column;
};

struct Line {
  int number;
  std::vector<Word> words;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) {
        line.words.push_back(
            {std::string(raw.substr(i, j - i)), static_cast<int>(i) + 1});
      }
      i = j;
    }
    if (!line.words.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, std::size_t word, const std::string& msg) {
  const int col = word < line.words.size() ? line.words[word].column : 1;
  throw ParseError(msg, line.number, col);
}

}  // namespace

ModelHeader read_model_header(std::string_view text) {
  ModelHeader h;
  for (const Line& line : split_lines(text)) {
    const std::string& kw = line.words[0].text;
    if (kw == "model" || kw == "theory") {
      if (line.words.size() != 2) fail(line, 0, "expected '" + kw + " <name>'");
      (kw == "model" ? h.model : h.theory) = line.words[1].text;
    }
  }
  if (h.theory.empty()) throw ParseError("missing 'theory' line", 1, 1);
  return h;
}

PartialStructure parse_model(std::string_view text,
                             std::shared_ptr<const phl::Theory> theory) {
  const phl::Signature& sig = theory->signature;
  std::vector<Line> lines = split_lines(text);
  std::string model_name;
  bool saw_theory = false;
  for (const Line& line : lines) {
    const std::string& kw = line.words[0].text;
    if (kw == "model" && line.words.size() == 2) model_name = line.words[1].text;
    if (kw == "theory" && line.words.size() == 2) {
      if (line.words[1].text != theory->name) {
        fail(line, 1, "model is over theory '" + line.words[1].text +
                          "', expected '" + theory->name + "'");
      }
      saw_theory = true;
    }
  }
  if (!saw_theory) throw ParseError("missing 'theory' line", 1, 1);

  StructureBuilder b(theory, model_name);
  for (const Line& line : lines) {
    const std::string& kw = line.words[0].text;
    if (kw == "model" || kw == "theory") {
      if (line.words.size() != 2) fail(line, 0, "expected '" + kw + " <name>'");
    } else if (kw == "elements") {
      if (line.words.size() < 2) fail(line, 0, "expected 'elements <sort> ids...'");
      auto s = sig.find_sort(line.words[1].text);
      if (!s) fail(line, 1, "unknown sort '" + line.words[1].text + "'");
      for (std::size_t i = 2; i < line.words.size(); ++i) {
        try {
          b.add_element(*s, line.words[i].text);
        } catch (const InvariantViolation& e) {
          fail(line, i, e.what());
        }
      }
    } else if (kw != "row") {
      fail(line, 0, "unknown directive '" + kw + "'");
    }
  }
  for (const Line& line : lines) {
    if (line.words[0].text != "row") continue;
    const std::size_t n = line.words.size();
    if (n < 4 || line.words[n - 2].text != "->") {
      fail(line, 0, "expected 'row <op> args... -> result'");
    }
    std::vector<std::string> args;
    for (std::size_t i = 2; i + 2 < n; ++i) args.push_back(line.words[i].text);
    try {
      b.set(line.words[1].text, args, line.words[n - 1].text);
    } catch (const Error& e) {
      fail(line, 1, e.what());
    }
  }
  return std::move(b).build();
}

std::string print_model(const PartialStructure& m) {
  const phl::Signature& sig = m.signature();
  std::ostringstream os;
  if (!m.name().empty()) os << "model " << m.name() << '\n';
  os << "theory " << m.theory().name << '\n';
  for (std::size_t s = 0; s < sig.sort_count(); ++s) {
    const phl::SortId sid{static_cast<std::uint32_t>(s)};
    os << "elements " << sig.sort(sid).name;
    for (const std::string& id : m.carrier(sid)) os << ' ' << id;
    os << '\n';
  }
  for (std::size_t f = 0; f < sig.op_count(); ++f) {
    const phl::OpId fid{static_cast<std::uint32_t>(f)};
    const phl::OpSymbol& op = sig.op(fid);
    m.for_each_row(fid, [&](std::span<const Elem> args, Elem result) {
      os << "row " << op.name;
      for (std::size_t i = 0; i < args.size(); ++i) {
        os << ' ' << m.element_id(op.arg_sorts[i], args[i]);
      }
      os << " -> " << m.element_id(op.result_sort, result) << '\n';
    });
  }
  return os.str();
}

}  // namespace isolab::models
