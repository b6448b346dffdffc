#include "foon/format.hpp"

#include <charconv>
#include <optional>
#include <set>
#include <system_error>

namespace foon {

ParseError::ParseError(std::string file, std::size_t line, std::string reason)
    : std::runtime_error(file + ":" + std::to_string(line) + ": " + reason),
      file_(std::move(file)),
      line_(line),
      reason_(std::move(reason)) {}

InvalidTaskTree::InvalidTaskTree(TreeViolation violation)
    : std::runtime_error("invalid task tree at " + describe(violation)),
      violation_(std::move(violation)) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\v\f");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\v\f");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(trim(line.substr(start, tab - start)));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

struct PendingObject {
  std::size_t line;
  std::string name;
  std::vector<std::string> states;
  std::vector<std::string> ingredients;
};

struct Located {
  ObjectNode node;
  std::size_t line;
};

enum class Mode { subgraph, kitchen };

class Reader {
public:
  Reader(std::string_view file, Mode mode) : file_(file), mode_(mode) {}

  void feed(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      handle(line_no, text.substr(start, end - start));
      start = end + 1;
    }
    finish();
  }

  std::vector<FunctionalUnit> units;
  Kitchen kitchen;

private:
  [[noreturn]] void fail(std::size_t line, std::string reason) const {
    throw ParseError(file_, line, std::move(reason));
  }

  void handle(std::size_t line_no, std::string_view raw) {
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (trim(raw).empty()) return;
    last_line_ = line_no;
    if (trim(raw) == "//") {
      end_unit(line_no);
      return;
    }
    auto fields = split_tabs(raw);
    const auto tag = fields.front();
    if (tag == "O") {
      if (fields.size() != 2) fail(line_no, "object line takes exactly one field");
      close_object();
      pending_ = PendingObject{line_no, std::string(fields[1]), {}, {}};
      in_block_ = true;
    } else if (tag == "S") {
      if (!pending_) fail(line_no, "state line without a preceding object line");
      if (fields.size() < 2 || fields.size() > 3) {
        fail(line_no, "state line takes a state and an optional ingredient set");
      }
      pending_->states.emplace_back(fields[1]);
      if (fields.size() == 3) read_ingredients(line_no, fields[2]);
    } else if (tag == "M") {
      if (mode_ == Mode::kitchen) fail(line_no, "motion line not allowed in kitchen file");
      read_motion(line_no, fields);
    } else {
      fail(line_no, "unknown record type '" + std::string(tag) + "'");
    }
  }

  void read_ingredients(std::size_t line_no, std::string_view field) {
    if (field.size() < 2 || field.front() != '{' || field.back() != '}') {
      fail(line_no, "ingredient set must be written as {a,b,...}");
    }
    auto body = field.substr(1, field.size() - 2);
    if (trim(body).empty()) return;
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      pending_->ingredients.emplace_back(trim(body.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }

  void read_motion(std::size_t line_no, const std::vector<std::string_view>& fields) {
    if (fields.size() < 2 || fields.size() > 3) {
      fail(line_no, "motion line takes a label and an optional success rate");
    }
    close_object();
    if (motion_) fail(line_no, "unit has more than one motion line");
    if (inputs_.empty()) fail(line_no, "unit has no inputs");
    double rate = 1.0;
    if (fields.size() == 3) {
      const auto text = fields[2];
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), rate);
      if (ec != std::errc{} || ptr != text.data() + text.size()) {
        fail(line_no, "success rate '" + std::string(text) + "' is not a number");
      }
      if (!(rate >= 0.0 && rate <= 1.0)) {
        fail(line_no, "success rate '" + std::string(text) + "' is outside [0, 1]");
      }
    }
    try {
      motion_.emplace(fields[1], rate);
    } catch (const InvalidNode& e) {
      fail(line_no, e.what());
    }
    in_block_ = true;
  }

  void close_object() {
    if (!pending_) return;
    auto pending = std::move(*pending_);
    pending_.reset();
    std::optional<ObjectNode> node;
    try {
      node.emplace(pending.name, std::move(pending.states), std::move(pending.ingredients));
    } catch (const InvalidNode& e) {
      fail(pending.line, e.what());
    }
    if (mode_ == Mode::kitchen) {
      kitchen.insert(std::move(*node));
      return;
    }
    auto& side = motion_ ? outputs_ : inputs_;
    for (const auto& existing : side) {
      if (existing.node == *node) {
        fail(pending.line, std::string("duplicate ") + (motion_ ? "output" : "input") +
                               " object " + node_key(*node));
      }
    }
    side.push_back({std::move(*node), pending.line});
  }

  void end_unit(std::size_t line_no) {
    close_object();
    if (mode_ == Mode::kitchen) {
      in_block_ = false;
      return;
    }
    if (!in_block_) fail(line_no, "empty unit");
    if (!motion_) fail(line_no, "unit has no motion line");
    if (outputs_.empty()) fail(line_no, "unit has no outputs");
    FunctionalUnit unit{{}, std::move(*motion_), {}};
    for (auto& in : inputs_) unit.inputs.push_back(std::move(in.node));
    for (auto& out : outputs_) unit.outputs.push_back(std::move(out.node));
    units.push_back(std::move(unit));
    inputs_.clear();
    outputs_.clear();
    motion_.reset();
    in_block_ = false;
  }

  void finish() {
    if (mode_ == Mode::kitchen) {
      close_object();
      return;
    }
    if (in_block_) fail(last_line_, "unterminated unit (missing '//')");
  }

  std::string file_;
  Mode mode_;
  std::optional<PendingObject> pending_;
  std::vector<Located> inputs_;
  std::vector<Located> outputs_;
  std::optional<MotionNode> motion_;
  bool in_block_ = false;
  std::size_t last_line_ = 0;
};

void write_object(std::string& out, const ObjectNode& node) {
  out += "O\t";
  out += node.name();
  out += '\n';
  for (std::size_t i = 0; i < node.states().size(); ++i) {
    out += "S\t";
    out += node.states()[i];
    if (i == 0 && !node.ingredients().empty()) {
      out += "\t{";
      for (std::size_t j = 0; j < node.ingredients().size(); ++j) {
        if (j != 0) out += ',';
        out += node.ingredients()[j];
      }
      out += '}';
    }
    out += '\n';
  }
}

void write_unit(std::string& out, const FunctionalUnit& unit) {
  for (const auto& node : unit.inputs) write_object(out, node);
  out += "M\t";
  out += unit.motion.label();
  out += '\t';
  out += format_rate(unit.motion.success_rate());
  out += '\n';
  for (const auto& node : unit.outputs) write_object(out, node);
  out += "//\n";
}

}  // namespace

std::vector<FunctionalUnit> parse_subgraph(std::string_view text, std::string_view file) {
  Reader reader(file, Mode::subgraph);
  reader.feed(text);
  return std::move(reader.units);
}

Kitchen parse_kitchen(std::string_view text, std::string_view file) {
  Reader reader(file, Mode::kitchen);
  reader.feed(text);
  return std::move(reader.kitchen);
}

std::string format_rate(double rate) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, rate);
  return std::string(buf, ptr);
}

std::string serialize_graph(const FoonGraph& graph) {
  std::string out(kSubgraphHeader);
  out += '\n';
  for (const auto& unit : graph.units()) write_unit(out, unit);
  return out;
}

std::string serialize_task_tree(const FoonGraph& graph, const TaskTree& tree,
                                const Kitchen& kitchen, std::string_view algorithm) {
  if (auto violation = verify_task_tree(graph, tree, kitchen)) {
    throw InvalidTaskTree(std::move(*violation));
  }
  std::string out(kSubgraphHeader);
  out += '\n';
  for (UnitId id : tree.units) write_unit(out, graph.unit(id));
  out += "# goal: " + node_key(tree.goal) + '\n';
  if (!algorithm.empty()) {
    out += "# algorithm: ";
    out += algorithm;
    out += '\n';
  }
  return out;
}

}  // namespace foon
