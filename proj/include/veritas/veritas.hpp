#pragma once

#include "veritas/ast.hpp"
#include "veritas/cli.hpp"
#include "veritas/errors.hpp"
#include "veritas/evaluate.hpp"
#include "veritas/final.hpp"
#include "veritas/fixpoint.hpp"
#include "veritas/graph.hpp"
#include "veritas/laws.hpp"
#include "veritas/parser.hpp"
#include "veritas/printer.hpp"
#include "veritas/report.hpp"
#include "veritas/theory.hpp"
#include "veritas/theory_file.hpp"
#include "veritas/truth.hpp"
