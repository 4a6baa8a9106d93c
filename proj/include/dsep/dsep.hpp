#ifndef DSEP_DSEP_HPP
#define DSEP_DSEP_HPP

#include "bounds.hpp"
#include "certificate.hpp"
#include "corpus.hpp"
#include "current_graph.hpp"
#include "dual.hpp"
#include "edit.hpp"
#include "error.hpp"
#include "faces.hpp"
#include "rotation_system.hpp"
#include "surgery.hpp"

#endif
