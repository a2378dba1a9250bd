#ifndef WXCOMPRESS_WXCOMPRESS_HPP
#define WXCOMPRESS_WXCOMPRESS_HPP

#include "wxcompress/awc_csv.hpp"
#include "wxcompress/compress.hpp"
#include "wxcompress/errors.hpp"
#include "wxcompress/geo_graph.hpp"
#include "wxcompress/metar.hpp"
#include "wxcompress/observation.hpp"
#include "wxcompress/persistence.hpp"
#include "wxcompress/report.hpp"
#include "wxcompress/scene.hpp"
#include "wxcompress/spectral.hpp"

#endif
