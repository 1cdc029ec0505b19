#include <iostream>

#include "cli_common.hpp"
#include "extremal/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "extremal-lab: exact small-scale computations for clique-constrained edge "
      "weightings, Ramsey witnesses, clique-free edge maxima, dependent random "
      "choice and regularity accounting"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "print help for every subcommand");

  lab::register_cmd_graph(app);
  lab::register_cmd_weight(app);
  lab::register_cmd_construct(app);
  lab::register_cmd_ramsey(app);
  lab::register_cmd_rt(app);
  lab::register_cmd_drc(app);
  lab::register_cmd_reg(app);
  lab::register_cmd_catalog(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; every flag or usage problem exits 1.
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const extremal::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const extremal::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const extremal::BudgetError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
