#include "morita/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "morita/errors.hpp"
#include "report_builder.hpp"

namespace morita {

  using nlohmann::json;

  namespace {

    // Payload problems carry no position of their own; they are reported at
    // the first line mentioning the offending field.
    struct Context {
      std::string text;

      std::size_t line_of(std::string const& key) const {
        auto const at = text.find("\"" + key + "\"");
        if (at == std::string::npos) {
          return 1;
        }
        return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + at, '\n'));
      }

      [[noreturn]] void fail(std::string const& key, std::string const& message) const {
        throw ParseError(line_of(key), message);
      }

      json const& field(json const& object, std::string const& key) const {
        if (!object.is_object() || !object.contains(key)) {
          fail(key, "missing field \"" + key + "\"");
        }
        return object.at(key);
      }

      std::vector<std::string> strings(json const& object, std::string const& key) const {
        auto const& v = field(object, key);
        if (!v.is_array()) {
          fail(key, "\"" + key + "\" must be an array of strings");
        }
        std::vector<std::string> out;
        for (auto const& e : v) {
          if (!e.is_string()) {
            fail(key, "\"" + key + "\" must be an array of strings");
          }
          out.push_back(e.get<std::string>());
        }
        return out;
      }

      std::string string(json const& v, std::string const& key) const {
        if (!v.is_string()) {
          fail(key, "expected a string in \"" + key + "\"");
        }
        return v.get<std::string>();
      }
    };

    // Unknown names become out-of-range indices so the validator reports
    // them as dangling identifiers.
    class Names {
     public:
      explicit Names(std::vector<std::string> const& names) : _size(names.size()) {
        for (std::size_t i = 0; i < names.size(); ++i) {
          _index.emplace(names[i], static_cast<std::uint32_t>(i));
        }
      }

      std::uint32_t operator()(std::string const& name) const {
        auto it = _index.find(name);
        return it == _index.end() ? static_cast<std::uint32_t>(_size) : it->second;
      }

      bool contains(std::string const& name) const {
        return _index.count(name) != 0;
      }

     private:
      std::map<std::string, std::uint32_t> _index;
      std::size_t                          _size;
    };

    std::string side_name(Side side) {
      return side == Side::left ? "left" : "right";
    }

    ////////////////////////////////////////////////////////////////////////
    // Groupoids
    ////////////////////////////////////////////////////////////////////////

    json encode_groupoid(FiniteGroupoid const& g) {
      json objects = json::array();
      for (Object o = 0; o < g.number_of_objects(); ++o) {
        objects.push_back(g.object_name(o));
      }
      json arrows = json::array();
      json inv    = json::object();
      for (Arrow a = 0; a < g.number_of_arrows(); ++a) {
        arrows.push_back({{"id", g.arrow_name(a)},
                          {"src", g.object_name(g.source(a))},
                          {"tgt", g.object_name(g.target(a))}});
        inv[g.arrow_name(a)] = g.arrow_name(g.inverse(a));
      }
      json unit = json::object();
      for (Object o = 0; o < g.number_of_objects(); ++o) {
        unit[g.object_name(o)] = g.arrow_name(g.unit(o));
      }
      json comp = json::array();
      for (auto const& [f, h, fh] : g.raw().composition) {
        comp.push_back({g.arrow_name(f), g.arrow_name(h), g.arrow_name(fh)});
      }
      return {{"objects", objects}, {"arrows", arrows}, {"unit", unit},
              {"inv", inv},         {"comp", comp}};
    }

    RawGroupoid decode_groupoid(Context const& cx, json const& p) {
      RawGroupoid raw;
      raw.object_names = cx.strings(p, "objects");
      Names const objects(raw.object_names);
      auto const& arrows = cx.field(p, "arrows");
      if (!arrows.is_array()) {
        cx.fail("arrows", "\"arrows\" must be an array");
      }
      for (auto const& a : arrows) {
        raw.arrow_names.push_back(cx.string(cx.field(a, "id"), "arrows"));
        raw.source.push_back(objects(cx.string(cx.field(a, "src"), "arrows")));
        raw.target.push_back(objects(cx.string(cx.field(a, "tgt"), "arrows")));
      }
      Names const arrow(raw.arrow_names);

      auto const& unit = cx.field(p, "unit");
      if (!unit.is_object()) {
        cx.fail("unit", "\"unit\" must map objects to arrows");
      }
      raw.unit.assign(raw.object_names.size(), static_cast<Arrow>(raw.arrow_names.size()));
      for (auto const& [o, a] : unit.items()) {
        if (!objects.contains(o)) {
          cx.fail("unit", "\"unit\" names unknown object \"" + o + "\"");
        }
        raw.unit[objects(o)] = arrow(cx.string(a, "unit"));
      }

      auto const& inv = cx.field(p, "inv");
      if (!inv.is_object()) {
        cx.fail("inv", "\"inv\" must map arrows to arrows");
      }
      raw.inverse.assign(raw.arrow_names.size(), static_cast<Arrow>(raw.arrow_names.size()));
      for (auto const& [a, b] : inv.items()) {
        if (!arrow.contains(a)) {
          cx.fail("inv", "\"inv\" names unknown arrow \"" + a + "\"");
        }
        raw.inverse[arrow(a)] = arrow(cx.string(b, "inv"));
      }

      auto const& comp = cx.field(p, "comp");
      if (!comp.is_array()) {
        cx.fail("comp", "\"comp\" must be an array of triples");
      }
      for (auto const& e : comp) {
        if (!e.is_array() || e.size() != 3) {
          cx.fail("comp", "\"comp\" entries must be [g, h, gh] triples");
        }
        raw.composition.push_back({arrow(cx.string(e[0], "comp")),
                                   arrow(cx.string(e[1], "comp")),
                                   arrow(cx.string(e[2], "comp"))});
      }
      return raw;
    }

    ////////////////////////////////////////////////////////////////////////
    // Actions
    ////////////////////////////////////////////////////////////////////////

    // moment and act of a possibly invalid table, against a known carrier
    json encode_action_tables(FiniteGroupoid const& g, RawAction const& raw, Side side) {
      using detail::index_name;
      std::vector<std::string> objects, arrows;
      for (Object o = 0; o < g.number_of_objects(); ++o) {
        objects.push_back(g.object_name(o));
      }
      for (Arrow a = 0; a < g.number_of_arrows(); ++a) {
        arrows.push_back(g.arrow_name(a));
      }
      json moment = json::object();
      for (Point x = 0; x < raw.carrier.size() && x < raw.moment.size(); ++x) {
        moment[raw.carrier[x]] = index_name(objects, raw.moment[x]);
      }
      json act = json::array();
      for (auto const& [arrow, x, y] : raw.entries) {
        auto const a = index_name(arrows, arrow);
        auto const p = index_name(raw.carrier, x);
        auto const q = index_name(raw.carrier, y);
        if (side == Side::left) {
          act.push_back({a, p, q});
        } else {
          act.push_back({p, a, q});
        }
      }
      return {{"moment", moment}, {"act", act}};
    }

    json encode_action_tables(Action const& a) {
      return encode_action_tables(a.groupoid(), a.raw(), a.side());
    }

    json encode_action(Action const& a) {
      auto out       = encode_action_tables(a);
      out["side"]    = side_name(a.side());
      out["carrier"] = a.carrier();
      return out;
    }

    RawAction decode_action_tables(Context const&                  cx,
                                   json const&                     p,
                                   FiniteGroupoid const&           g,
                                   std::vector<std::string> const& carrier,
                                   Side                            side) {
      RawAction raw;
      raw.carrier = carrier;
      Names const points(carrier);
      std::vector<std::string> objects, arrows;
      for (Object o = 0; o < g.number_of_objects(); ++o) {
        objects.push_back(g.object_name(o));
      }
      for (Arrow a = 0; a < g.number_of_arrows(); ++a) {
        arrows.push_back(g.arrow_name(a));
      }
      Names const object(objects);
      Names const arrow(arrows);

      auto const& moment = cx.field(p, "moment");
      if (!moment.is_object()) {
        cx.fail("moment", "\"moment\" must map points to objects");
      }
      raw.moment.assign(carrier.size(), static_cast<Object>(objects.size()));
      for (auto const& [x, o] : moment.items()) {
        if (!points.contains(x)) {
          cx.fail("moment", "\"moment\" names unknown point \"" + x + "\"");
        }
        raw.moment[points(x)] = object(cx.string(o, "moment"));
      }
      auto const& act = cx.field(p, "act");
      if (!act.is_array()) {
        cx.fail("act", "\"act\" must be an array of triples");
      }
      for (auto const& e : act) {
        if (!e.is_array() || e.size() != 3) {
          cx.fail("act", "\"act\" entries must be triples");
        }
        auto const first  = cx.string(e[0], "act");
        auto const second = cx.string(e[1], "act");
        auto const result = points(cx.string(e[2], "act"));
        if (side == Side::left) {
          raw.entries.push_back({arrow(first), points(second), result});
        } else {
          raw.entries.push_back({arrow(second), points(first), result});
        }
      }
      return raw;
    }

    Side decode_side(Context const& cx, json const& p) {
      auto const s = cx.string(cx.field(p, "side"), "side");
      if (s == "left") {
        return Side::left;
      }
      if (s == "right") {
        return Side::right;
      }
      cx.fail("side", "\"side\" must be \"left\" or \"right\"");
    }

    Action decode_action(Context const& cx, json const& p, FiniteGroupoid const& g) {
      auto const side    = decode_side(cx, p);
      auto const carrier = cx.strings(p, "carrier");
      return Action::make(g, decode_action_tables(cx, p, g, carrier, side), side);
    }

    json encode_bundle(Bundle const& b) {
      auto out       = encode_action(b.action());
      out["base"]    = b.base();
      json projection = json::object();
      for (Point x = 0; x < b.action().size(); ++x) {
        projection[b.action().point_name(x)] = b.base().at(b.project(x));
      }
      out["projection"] = projection;
      return out;
    }

    Bundle decode_bundle(Context const& cx, json const& p, FiniteGroupoid const& g) {
      auto        action = decode_action(cx, p, g);
      auto const  base   = cx.strings(p, "base");
      Names const names(base);
      auto const& proj = cx.field(p, "projection");
      if (!proj.is_object()) {
        cx.fail("projection", "\"projection\" must map points to base elements");
      }
      std::vector<std::uint32_t> projection(action.size(),
                                            static_cast<std::uint32_t>(base.size()));
      for (auto const& [x, v] : proj.items()) {
        auto const point = action.find_point(x);
        if (!point) {
          cx.fail("projection", "\"projection\" names unknown point \"" + x + "\"");
        }
        projection[*point] = names(cx.string(v, "projection"));
      }
      return Bundle::make(std::move(action), base, std::move(projection));
    }

    ////////////////////////////////////////////////////////////////////////
    // Bibundles and certificates
    ////////////////////////////////////////////////////////////////////////

    json encode_raw_bibundle(FiniteGroupoid const& g, FiniteGroupoid const& h, RawBibundle const& raw) {
      return {{"carrier", raw.left.carrier},
              {"left", encode_action_tables(g, raw.left, Side::left)},
              {"right", encode_action_tables(h, raw.right, Side::right)}};
    }

    RawBibundle decode_raw_bibundle(Context const&        cx,
                                    json const&           p,
                                    FiniteGroupoid const& g,
                                    FiniteGroupoid const& h) {
      auto const carrier = cx.strings(p, "carrier");
      return {decode_action_tables(cx, cx.field(p, "left"), g, carrier, Side::left),
              decode_action_tables(cx, cx.field(p, "right"), h, carrier, Side::right)};
    }

    json encode_certificate(MoritaCertificate const& c) {
      json iso_g = json::array();
      for (auto a : c.iso_g) {
        iso_g.push_back(a < c.g.number_of_arrows() ? c.g.arrow_name(a) : "#" + std::to_string(a));
      }
      json iso_h = json::array();
      for (auto a : c.iso_h) {
        iso_h.push_back(a < c.h.number_of_arrows() ? c.h.arrow_name(a) : "#" + std::to_string(a));
      }
      return {{"b", encode_raw_bibundle(c.g, c.h, c.b)},
              {"c", encode_raw_bibundle(c.h, c.g, c.c)},
              {"iso_g", iso_g},
              {"iso_h", iso_h}};
    }

    std::vector<Point> decode_arrow_list(Context const& cx,
                                         json const&    p,
                                         std::string const& key,
                                         FiniteGroupoid const& g) {
      std::vector<Point> out;
      for (auto const& name : cx.strings(p, key)) {
        auto const a = g.find_arrow(name);
        if (!a) {
          cx.fail(key, "\"" + key + "\" names unknown arrow \"" + name + "\"");
        }
        out.push_back(*a);
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Files
    ////////////////////////////////////////////////////////////////////////

    std::string read_file(std::filesystem::path const& path, std::string const& name) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw UnresolvedReference(name);
      }
      std::ostringstream s;
      s << in.rdbuf();
      return s.str();
    }

    void write_file(std::filesystem::path const& path, std::string const& text) {
      std::ofstream out(path, std::ios::binary);
      if (!out) {
        throw std::runtime_error("cannot write " + path.string());
      }
      out << text;
    }

    Kind parse_kind(std::string const& s, std::size_t line) {
      for (auto k : {Kind::groupoid, Kind::action, Kind::bundle, Kind::bibundle,
                     Kind::certificate}) {
        if (to_string(k) == s) {
          return k;
        }
      }
      throw ParseError(line, "unknown kind \"" + s + "\"");
    }

    FiniteGroupoid resolve_groupoid(ObjectFile const&            file,
                                    std::string const&           role,
                                    std::filesystem::path const& dir,
                                    Context const&               cx) {
      auto it = file.references.find(role);
      if (it == file.references.end()) {
        cx.fail("references", "missing reference \"" + role + "\"");
      }
      auto const path = dir / it->second;
      auto const g    = load(path);
      if (!std::holds_alternative<FiniteGroupoid>(g)) {
        cx.fail("references", "reference \"" + role + "\" is not a groupoid");
      }
      return std::get<FiniteGroupoid>(g);
    }

  }  // namespace

  std::string to_string(Kind kind) {
    switch (kind) {
      case Kind::groupoid: return "groupoid";
      case Kind::action: return "action";
      case Kind::bundle: return "bundle";
      case Kind::bibundle: return "bibundle";
      case Kind::certificate: return "certificate";
    }
    return "?";
  }

  Kind kind_of(Stored const& object) {
    return static_cast<Kind>(object.index());
  }

  ObjectFile parse_object_file(std::string const& text) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (json::parse_error const& e) {
      auto const upto = std::min<std::size_t>(e.byte, text.size());
      auto const line = 1 + std::count(text.begin(), text.begin() + upto, '\n');
      throw ParseError(static_cast<std::size_t>(line), e.what());
    }
    Context const cx{text};
    if (!doc.is_object()) {
      throw ParseError(1, "top level must be an object");
    }
    auto const& version = cx.field(doc, "format_version");
    if (!version.is_number_integer()) {
      cx.fail("format_version", "\"format_version\" must be an integer");
    }
    ObjectFile file;
    file.format_version = version.get<int>();
    if (file.format_version > kFormatVersion) {
      cx.fail("format_version", "format_version " + std::to_string(file.format_version)
                                    + " is newer than supported version "
                                    + std::to_string(kFormatVersion));
    }
    if (file.format_version < 1) {
      cx.fail("format_version", "format_version must be at least 1");
    }
    file.kind    = parse_kind(cx.string(cx.field(doc, "kind"), "kind"), cx.line_of("kind"));
    file.payload = cx.field(doc, "payload");
    if (doc.contains("references")) {
      auto const& refs = doc.at("references");
      if (!refs.is_object()) {
        cx.fail("references", "\"references\" must map names to paths");
      }
      for (auto const& [name, path] : refs.items()) {
        file.references[name] = cx.string(path, "references");
      }
    }
    return file;
  }

  std::string dump(ObjectFile const& file) {
    json doc{{"format_version", file.format_version},
             {"kind", to_string(file.kind)},
             {"payload", file.payload}};
    if (!file.references.empty()) {
      doc["references"] = file.references;
    }
    return doc.dump(2) + "\n";
  }

  nlohmann::json groupoid_payload(FiniteGroupoid const& g) {
    return encode_groupoid(g);
  }

  FiniteGroupoid groupoid_from_payload(nlohmann::json const& payload) {
    Context const cx{payload.dump(2)};
    return FiniteGroupoid::make(decode_groupoid(cx, payload));
  }

  Stored load(std::filesystem::path const& path) {
    auto const    text = read_file(path, path.string());
    auto const    file = parse_object_file(text);
    Context const cx{text};
    auto const    dir = path.parent_path();
    auto const&   p   = file.payload;
    switch (file.kind) {
      case Kind::groupoid:
        return FiniteGroupoid::make(decode_groupoid(cx, p));
      case Kind::action:
        return decode_action(cx, p, resolve_groupoid(file, "groupoid", dir, cx));
      case Kind::bundle:
        return decode_bundle(cx, p, resolve_groupoid(file, "groupoid", dir, cx));
      case Kind::bibundle: {
        auto const g = resolve_groupoid(file, "left_groupoid", dir, cx);
        auto const h = resolve_groupoid(file, "right_groupoid", dir, cx);
        return Bibundle::make(g, h, decode_raw_bibundle(cx, p, g, h));
      }
      case Kind::certificate: {
        MoritaCertificate c;
        c.g = resolve_groupoid(file, "left_groupoid", dir, cx);
        c.h = resolve_groupoid(file, "right_groupoid", dir, cx);
        c.b = decode_raw_bibundle(cx, cx.field(p, "b"), c.g, c.h);
        c.c = decode_raw_bibundle(cx, cx.field(p, "c"), c.h, c.g);
        auto report = validate_bibundle(c.g, c.h, c.b);
        report.append(validate_bibundle(c.h, c.g, c.c));
        if (!report.ok()) {
          throw ValidationError("certificate bibundles", std::move(report));
        }
        c.iso_g = decode_arrow_list(cx, p, "iso_g", c.g);
        c.iso_h = decode_arrow_list(cx, p, "iso_h", c.h);
        return c;
      }
    }
    throw ParseError(1, "unsupported kind");
  }

  ObjectFile save(Stored const& object, std::filesystem::path const& path) {
    ObjectFile file;
    file.kind       = kind_of(object);
    auto const stem = path.stem().string();
    auto const dir  = path.parent_path();
    auto const reference = [&](std::string const& role, FiniteGroupoid const& g) {
      auto const name = stem + "." + role + ".json";
      save(g, dir / name);
      file.references[role] = name;
    };
    std::visit(
        [&](auto const& o) {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, FiniteGroupoid>) {
            file.payload = encode_groupoid(o);
          } else if constexpr (std::is_same_v<T, Action>) {
            reference("groupoid", o.groupoid());
            file.payload = encode_action(o);
          } else if constexpr (std::is_same_v<T, Bundle>) {
            reference("groupoid", o.action().groupoid());
            file.payload = encode_bundle(o);
          } else if constexpr (std::is_same_v<T, Bibundle>) {
            reference("left_groupoid", o.left_groupoid());
            reference("right_groupoid", o.right_groupoid());
            file.payload = encode_raw_bibundle(o.left_groupoid(), o.right_groupoid(), o.raw());
          } else {
            reference("left_groupoid", o.g);
            reference("right_groupoid", o.h);
            file.payload = encode_certificate(o);
          }
        },
        object);
    write_file(path, dump(file));
    return file;
  }

}  // namespace morita
