// Walks through the main entry points on a few small graphs.

#include <iostream>

#include "exdepth/exdepth.hpp"

int main() {
  using namespace exdepth;

  // A generated family carries its tag, so the closed form is used.
  Graph spider_graph = generate(spider({1, 2, 3, 4}));
  DepthReport r = depth_exterior(spider_graph);
  std::cout << "SP_{1,2,3,4}\n" << render_text(r, &spider_graph) << '\n';

  // The same graph without its tag goes through tree recursion.
  DepthReport t = depth_exterior(spider_graph.without_family());
  std::cout << "untagged: depth " << t.depth_E << " via " << t.method.front() << "\n\n";

  // Betti numbers of the triangle.
  Graph c3 = generate(cycle(3));
  BettiData b = multigraded_betti(c3);
  std::cout << "C_3 Betti table\n" << render_betti_table(b) << '\n';

  // A linear form regular on E/I_E(P_4), and one that is not.
  Graph p4 = generate(path(4));
  std::cout << "P_4: e1+e4 regular " << is_regular(p4, LinearForm{1, 0, 0, 1}) << ", e2+e3 regular "
            << is_regular(p4, LinearForm{0, 1, 1, 0}) << "\n\n";

  // Edge-list input and JSON output.
  Graph g = parse_graph("5\n1 2\n2 3\n3 4\n4 5\n5 1\n1 3\n");
  std::cout << render_json(depth_exterior(g)) << '\n';

  // Monte Carlo rank-variety oracle as an independent check.
  auto rv = depth_via_rank_variety(g);
  std::cout << "rank-variety depth " << rv.depth << ", variety " << rv.variety->render() << '\n';
}
