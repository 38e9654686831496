#include "pegasus_topo/render.hpp"

#include <gtest/gtest.h>

#include <regex>
#include <set>

#include "oracle.hpp"

namespace pegasus_topo {
namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

std::set<std::string> colors_in(const std::string& svg) {
  std::set<std::string> out;
  static const std::regex hex("#[0-9A-Fa-f]{6}");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), hex); it != std::sregex_iterator(); ++it)
    out.insert(it->str());
  return out;
}

TEST(Render, ElementCountsPerStyle) {
  const auto g = pegasus_graph({2, 2, 3});
  for (auto style : {RenderStyle::TiltedClassic, RenderStyle::Diamond, RenderStyle::Triangle}) {
    for (bool tilted : {false, true}) {
      RenderSpec spec;
      spec.style = style;
      spec.tilted_lattice = tilted;
      const auto svg = render_svg(g, spec);
      EXPECT_TRUE(svg.starts_with("<?xml"));
      EXPECT_NE(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\""), std::string::npos);
      EXPECT_EQ(count(svg, "<circle class=\"qubit\""), g.vertex_count());
      EXPECT_EQ(count(svg, "<line class=\"edge "), g.edge_count());
      EXPECT_EQ(count(svg, "</svg>"), 1u);
    }
  }
}

TEST(Render, CompressedStyle) {
  const auto g = pegasus_graph({2, 2, 3});
  const auto cg = compress(g);
  RenderSpec spec;
  spec.style = RenderStyle::Compressed;
  const auto svg = render_svg(cg, spec);
  EXPECT_EQ(count(svg, "<circle class=\"cell\""), cg.vertex_count());
  EXPECT_EQ(count(svg, "<line class=\"edge "), cg.edges.size());
  EXPECT_THROW((void)render_svg(g, spec), UsageError);
  spec.style = RenderStyle::Diamond;
  EXPECT_THROW((void)render_svg(cg, spec), UsageError);
}

TEST(Render, ColorGroups) {
  const auto g = pegasus_graph({2, 2, 3});
  RenderSpec spec;
  spec.style = RenderStyle::Diamond;
  spec.color_mode = ColorMode::ByColorGroup;
  const auto svg = render_svg(g, spec);
  static const std::regex line(R"re(<line class="edge ([a-z-]+)"[^>]*stroke="(#[0-9A-F]{6})")re");
  const std::set<std::string> groups{"#0000FF", "#FF0000", "#008000", "#FFA500"};
  std::size_t inter = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line); it != std::sregex_iterator(); ++it) {
    const std::string cls = (*it)[1];
    const std::string color = (*it)[2];
    if (cls.starts_with("interlayer-")) {
      ++inter;
      EXPECT_TRUE(groups.count(color)) << cls;
      const auto c = edge_class_from_string(cls);
      EXPECT_EQ(color, group_color(c->group));
    } else if (cls == "pegasus-intra") {
      EXPECT_EQ(color, "#000000");
    } else {
      EXPECT_EQ(color, "#808080");
    }
  }
  EXPECT_EQ(inter, interlayer_edges_grouped({2, 2, 3}).size());
}

TEST(Render, SixteenCouplersPerColorAroundInteriorCell) {
  const Dims d{5, 5, 3};
  const auto g = pegasus_graph(d);
  for (int z = 0; z < 3; ++z) {
    std::map<ColorGroup, std::size_t> per_color;
    for (const Edge& e : g.edges()) {
      if (e.cls.kind != EdgeKind::PegasusInterLayer) continue;
      const CellCoord c{2, 2, z};
      if (g.coord(e.a).cell() == c || g.coord(e.b).cell() == c) ++per_color[e.cls.group];
    }
    ASSERT_EQ(per_color.size(), 4u);
    for (const auto& [grp, n] : per_color) EXPECT_EQ(n, 16u) << to_string(grp);
  }
}

TEST(Render, MonochromeUsesOnlyBlackAndGrey) {
  RenderSpec spec;
  spec.color_mode = ColorMode::Monochrome;
  for (auto style : {RenderStyle::TiltedClassic, RenderStyle::Diamond, RenderStyle::Triangle}) {
    spec.style = style;
    const auto colors = colors_in(render_svg(pegasus_graph({2, 2, 3}), spec));
    for (const auto& c : colors) EXPECT_TRUE(c == "#000000" || c == "#808080") << c;
  }
  spec.style = RenderStyle::Compressed;
  for (const auto& c : colors_in(render_svg(compress(pegasus_graph({2, 2, 3})), spec)))
    EXPECT_TRUE(c == "#000000" || c == "#808080") << c;
}

TEST(Render, EdgeClassModeDistinguishesKinds) {
  RenderSpec spec;
  spec.color_mode = ColorMode::ByEdgeClass;
  const auto colors = colors_in(render_svg(pegasus_graph({2, 2, 3}), spec));
  EXPECT_GE(colors.size(), 5u);
}

TEST(Render, Deterministic) {
  RenderSpec spec;
  spec.style = RenderStyle::Triangle;
  spec.tilted_lattice = true;
  EXPECT_EQ(render_svg(pegasus_graph({3, 2, 3}, {1}), spec),
            render_svg(pegasus_graph({3, 2, 3}, {4}), spec));
}

TEST(Render, TiltChangesGeometryOnly) {
  RenderSpec flat, tilted;
  tilted.tilted_lattice = true;
  const auto g = chimera_graph({5, 5, 1});
  const auto a = render_svg(g, flat);
  const auto b = render_svg(g, tilted);
  EXPECT_NE(a, b);
  EXPECT_EQ(count(a, "<line"), count(b, "<line"));
}

TEST(Render, BoundaryStubs) {
  const Dims d{2, 2, 3};
  const auto g = pegasus_graph(d);
  RenderSpec spec;
  spec.show_boundary_stubs = true;
  const auto svg = render_svg(g, spec);
  // couplers of a 4x4 patch with exactly one end in the central 2x2 window
  std::size_t crossing = 0;
  const oracle::Lattice big{4, 4, 3, true};
  auto inside = [](std::size_t idx) {
    const std::size_t cell = idx / 8;
    const std::size_t x = cell % 4, y = (cell / 4) % 4;
    return x >= 1 && x <= 2 && y >= 1 && y <= 2;
  };
  for (const auto& [a, b, lab] : oracle::edges(big)) crossing += inside(a) != inside(b);
  EXPECT_GT(crossing, 0u);
  EXPECT_EQ(count(svg, "<line class=\"stub\""), crossing);
  EXPECT_EQ(count(svg, "<line class=\"edge "), g.edge_count());
}

TEST(Render, LimitsAndParameters) {
  RenderSpec spec;
  spec.max_cells = 10;
  EXPECT_THROW((void)render_svg(pegasus_graph({2, 2, 3}), spec), UsageError);
  spec.max_cells = 12;
  EXPECT_NO_THROW((void)render_svg(pegasus_graph({2, 2, 3}), spec));
  spec.cell_pitch = 0;
  EXPECT_THROW((void)render_svg(pegasus_graph({2, 2, 3}), spec), UsageError);
}

}  // namespace
}  // namespace pegasus_topo
