#ifndef OSPM_OSPM_HPP
#define OSPM_OSPM_HPP

#include <ospm/cform.hpp>
#include <ospm/errors.hpp>
#include <ospm/fusion.hpp>
#include <ospm/laurent.hpp>
#include <ospm/qcomb.hpp>
#include <ospm/ramyip.hpp>
#include <ospm/rational_function.hpp>
#include <ospm/render.hpp>
#include <ospm/verify.hpp>
#include <ospm/walks.hpp>
#include <ospm/weylchar.hpp>
#include <ospm/xpolynomial.hpp>

#endif
