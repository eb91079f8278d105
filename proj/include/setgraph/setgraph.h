/*
 * C interface to the set-graph library.
 *
 * Every fallible call returns an sg_status; on failure a description is
 * available from sg_last_error() until the next failing call on the same
 * thread. Handles are opaque and owned by the caller once returned.
 */
#ifndef SETGRAPH_H
#define SETGRAPH_H

#include <stddef.h>
#include <stdint.h>

#if defined(SETGRAPH_BUILDING)
#  define SETGRAPH_API __attribute__((visibility("default")))
#else
#  define SETGRAPH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sg_status {
    SG_OK = 0,
    SG_ERR_RANGE = 1,     /* n, index or cap out of range */
    SG_ERR_INVALID = 2,   /* malformed argument, unknown key/format/claim */
    SG_ERR_RESOURCE = 3,  /* refused by a memory or search guard */
    SG_ERR_IO = 4,
    SG_ERR_INTERNAL = 5
} sg_status;

typedef struct sg_config sg_config;
typedef struct sg_graph sg_graph;
typedef struct sg_text sg_text;

SETGRAPH_API const char * sg_version(void);
SETGRAPH_API const char * sg_status_name(sg_status status);
SETGRAPH_API const char * sg_last_error(void);

/* Configuration. Keys: max_n, count_cap, materialize_cap, triangle_cap,
 * holes_cap, threads, mela_max_index, timestamp, oracle.cliques,
 * oracle.chromatic, oracle.independence, oracle.domination, oracle.bondage,
 * oracle.vertex_cover. A NULL config means defaults wherever accepted. */
SETGRAPH_API sg_status sg_config_create(sg_config ** out);
SETGRAPH_API void sg_config_destroy(sg_config * config);
SETGRAPH_API sg_status sg_config_set(sg_config * config, const char * key, unsigned value);
SETGRAPH_API sg_status sg_config_get(const sg_config * config, const char * key, unsigned * out);

/* Closed forms and recursions. */
SETGRAPH_API sg_status sg_vertex_count(unsigned n, uint64_t * out);
SETGRAPH_API sg_status sg_edge_count(unsigned n, uint64_t * out);
SETGRAPH_API sg_status sg_edge_count_recursive(unsigned n, uint64_t * out);
SETGRAPH_API sg_status sg_degree(unsigned n, unsigned cardinality, uint64_t * out);
SETGRAPH_API sg_status sg_holes_corrected(unsigned n, uint64_t * out);
SETGRAPH_API sg_status sg_holes_paper_formula(unsigned n, uint64_t * out);
SETGRAPH_API sg_status sg_label_of_mask(unsigned n, uint32_t mask, unsigned * s, uint64_t * i);
SETGRAPH_API sg_status sg_mask_of_label(unsigned n, unsigned s, uint64_t i, uint32_t * mask);

/* Materialized graphs; vertices are canonical indices 0..order-1. */
SETGRAPH_API sg_status sg_graph_create(unsigned n, const sg_config * config, sg_graph ** out);
SETGRAPH_API void sg_graph_destroy(sg_graph * graph);
SETGRAPH_API size_t sg_graph_order(const sg_graph * graph);
SETGRAPH_API sg_status sg_graph_mask(const sg_graph * graph, size_t v, uint32_t * out);
SETGRAPH_API int sg_graph_adjacent(const sg_graph * graph, size_t u, size_t v);
SETGRAPH_API sg_status sg_graph_degree(const sg_graph * graph, size_t v, uint64_t * out);
SETGRAPH_API sg_status sg_graph_edge_count(const sg_graph * graph, uint64_t * out);
SETGRAPH_API sg_status sg_graph_triangles(const sg_graph * graph, unsigned threads, uint64_t * out);
SETGRAPH_API sg_status sg_graph_primitive_degree(const sg_graph * graph, size_t v, uint64_t * out);

/* Documents. format: "dot" | "json" | "csv" for graphs, "json" | "md" for reports;
 * metric: vertices | edges | holes | degree_min | degree_max | mela. */
SETGRAPH_API sg_status sg_export_graph(unsigned n, const char * format, const sg_config * config, sg_text ** out);
SETGRAPH_API sg_status sg_invariants(unsigned n, const sg_config * config, sg_text ** out);
SETGRAPH_API sg_status sg_hole_report(unsigned n, const sg_config * config, sg_text ** out);
SETGRAPH_API sg_status sg_degree_csv(unsigned n, sg_text ** out);
SETGRAPH_API sg_status sg_tightness_csv(unsigned n, sg_text ** out);
SETGRAPH_API sg_status sg_sequence(const char * metric, unsigned max_n, const sg_config * config, sg_text ** out);
SETGRAPH_API sg_status sg_verify(const char * claims, const char * format, const sg_config * config, sg_text ** out);
SETGRAPH_API sg_status sg_mela_report(unsigned max_index, const char * format, const sg_config * config, sg_text ** out);

SETGRAPH_API const char * sg_text_data(const sg_text * text);
SETGRAPH_API size_t sg_text_size(const sg_text * text);
SETGRAPH_API void sg_text_destroy(sg_text * text);

#ifdef __cplusplus
}
#endif

#endif
