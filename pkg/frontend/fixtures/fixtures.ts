// generated by scripts/make_fixtures.py; do not edit by hand
export const pbt_p4_g3 = {"events": [{"budget": 1, "iteration": 0, "kind": "sample", "note": null, "objective": null, "parent": null, "seq": 2, "trial_id": 0}, {"budget": 1, "iteration": 0, "kind": "sample", "note": null, "objective": null, "parent": null, "seq": 5, "trial_id": 1}, {"budget": 1, "iteration": 0, "kind": "sample", "note": null, "objective": null, "parent": null, "seq": 10, "trial_id": 2}, {"budget": 1, "iteration": 0, "kind": "sample", "note": null, "objective": null, "parent": null, "seq": 13, "trial_id": 3}, {"budget": 1, "iteration": 0, "kind": "evaluate", "note": null, "objective": 0.25768939931587226, "parent": null, "seq": 17, "trial_id": 0}, {"budget": 1, "iteration": 0, "kind": "evaluate", "note": null, "objective": 0.3597289140536063, "parent": null, "seq": 18, "trial_id": 1}, {"budget": 1, "iteration": 0, "kind": "evaluate", "note": null, "objective": 0.0475112720543392, "parent": null, "seq": 19, "trial_id": 2}, {"budget": 1, "iteration": 0, "kind": "evaluate", "note": null, "objective": 0.1362786619114635, "parent": null, "seq": 20, "trial_id": 3}, {"budget": 1, "iteration": 0, "kind": "survive", "note": null, "objective": 0.3597289140536063, "parent": null, "seq": 21, "trial_id": 1}, {"budget": 1, "iteration": 0, "kind": "survive", "note": null, "objective": 0.25768939931587226, "parent": null, "seq": 22, "trial_id": 0}, {"budget": 1, "iteration": 0, "kind": "discard", "note": null, "objective": 0.0475112720543392, "parent": null, "seq": 23, "trial_id": 2}, {"budget": 1, "iteration": 0, "kind": "discard", "note": null, "objective": 0.1362786619114635, "parent": null, "seq": 24, "trial_id": 3}, {"budget": 1, "iteration": 1, "kind": "mutate", "note": null, "objective": null, "parent": 0, "seq": 32, "trial_id": 6}, {"budget": 1, "iteration": 1, "kind": "mutate", "note": null, "objective": null, "parent": 0, "seq": 35, "trial_id": 7}, {"budget": 2, "iteration": 1, "kind": "evaluate", "note": null, "objective": 0.3597289140536063, "parent": null, "seq": 39, "trial_id": 4}, {"budget": 2, "iteration": 1, "kind": "evaluate", "note": null, "objective": 0.25768939931587226, "parent": null, "seq": 40, "trial_id": 5}, {"budget": 2, "iteration": 1, "kind": "evaluate", "note": null, "objective": 0.2474906470037498, "parent": null, "seq": 41, "trial_id": 6}, {"budget": 2, "iteration": 1, "kind": "evaluate", "note": null, "objective": 0.34466684602375725, "parent": null, "seq": 42, "trial_id": 7}, {"budget": 2, "iteration": 1, "kind": "survive", "note": null, "objective": 0.3597289140536063, "parent": null, "seq": 43, "trial_id": 4}, {"budget": 2, "iteration": 1, "kind": "survive", "note": null, "objective": 0.34466684602375725, "parent": null, "seq": 44, "trial_id": 7}, {"budget": 2, "iteration": 1, "kind": "discard", "note": null, "objective": 0.25768939931587226, "parent": null, "seq": 45, "trial_id": 5}, {"budget": 2, "iteration": 1, "kind": "discard", "note": null, "objective": 0.2474906470037498, "parent": null, "seq": 46, "trial_id": 6}, {"budget": 1, "iteration": 2, "kind": "mutate", "note": null, "objective": null, "parent": 4, "seq": 53, "trial_id": 10}, {"budget": 1, "iteration": 2, "kind": "mutate", "note": null, "objective": null, "parent": 4, "seq": 57, "trial_id": 11}, {"budget": 3, "iteration": 2, "kind": "evaluate", "note": null, "objective": 0.3597289140536063, "parent": null, "seq": 61, "trial_id": 8}, {"budget": 3, "iteration": 2, "kind": "evaluate", "note": null, "objective": 0.34466684602375725, "parent": null, "seq": 62, "trial_id": 9}, {"budget": 3, "iteration": 2, "kind": "evaluate", "note": null, "objective": 0.2663730525062707, "parent": null, "seq": 63, "trial_id": 10}, {"budget": 3, "iteration": 2, "kind": "evaluate", "note": null, "objective": 0.3077753051433688, "parent": null, "seq": 64, "trial_id": 11}, {"budget": 3, "iteration": 2, "kind": "survive", "note": null, "objective": 0.3597289140536063, "parent": null, "seq": 65, "trial_id": 8}, {"budget": 3, "iteration": 2, "kind": "survive", "note": null, "objective": 0.34466684602375725, "parent": null, "seq": 66, "trial_id": 9}, {"budget": 3, "iteration": 2, "kind": "discard", "note": null, "objective": 0.2663730525062707, "parent": null, "seq": 67, "trial_id": 10}, {"budget": 3, "iteration": 2, "kind": "discard", "note": null, "objective": 0.3077753051433688, "parent": null, "seq": 68, "trial_id": 11}], "exploration": {"chains": [{"points": [{"budget": 1, "iteration": 0, "objective": 0.25768939931587226, "trial_id": 0}, {"budget": 2, "iteration": 1, "objective": 0.25768939931587226, "trial_id": 5}], "trial_ids": [0, 5], "values": {"activation": "sigmoid", "lr": 0.01331896124628499, "momentum": 0.605847029570968}}, {"points": [{"budget": 1, "iteration": 0, "objective": 0.3597289140536063, "trial_id": 1}, {"budget": 2, "iteration": 1, "objective": 0.3597289140536063, "trial_id": 4}, {"budget": 3, "iteration": 2, "objective": 0.3597289140536063, "trial_id": 8}], "trial_ids": [1, 4, 8], "values": {"activation": "sigmoid", "lr": 2.2719119280217482e-05, "momentum": 0.6307144158739043}}, {"points": [{"budget": 2, "iteration": 1, "objective": 0.34466684602375725, "trial_id": 7}, {"budget": 3, "iteration": 2, "objective": 0.34466684602375725, "trial_id": 9}], "trial_ids": [7, 9], "values": {"activation": "sigmoid", "lr": 0.03345571803634518, "momentum": 0.705847029570968}}], "links": [{"child": 6, "iteration": 1, "parent": 0}, {"child": 7, "iteration": 1, "parent": 0}, {"child": 10, "iteration": 2, "parent": 4}, {"child": 11, "iteration": 2, "parent": 4}], "params": [{"high": 0.1, "kind": "continuous", "low": 1e-05, "name": "lr", "points": [{"iteration": 0, "kind": "sample", "objective": 0.25768939931587226, "parent": null, "parent_value": null, "status": "ok", "trial_id": 0, "value": 0.01331896124628499}, {"iteration": 0, "kind": "sample", "objective": 0.3597289140536063, "parent": null, "parent_value": null, "status": "ok", "trial_id": 1, "value": 2.2719119280217482e-05}, {"iteration": 0, "kind": "sample", "objective": 0.0475112720543392, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 2, "value": 0.0004938791470616292}, {"iteration": 0, "kind": "sample", "objective": 0.1362786619114635, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 3, "value": 0.005057416716169009}, {"iteration": 1, "kind": "mutate", "objective": 0.2474906470037498, "parent": 0, "parent_value": 0.01331896124628499, "status": "discarded", "trial_id": 6, "value": 0.03345571803634518}, {"iteration": 1, "kind": "mutate", "objective": 0.34466684602375725, "parent": 0, "parent_value": 0.01331896124628499, "status": "ok", "trial_id": 7, "value": 0.03345571803634518}, {"iteration": 2, "kind": "mutate", "objective": 0.2663730525062707, "parent": 4, "parent_value": 2.2719119280217482e-05, "status": "discarded", "trial_id": 10, "value": 5.706784745582598e-05}, {"iteration": 2, "kind": "mutate", "objective": 0.3077753051433688, "parent": 4, "parent_value": 2.2719119280217482e-05, "status": "discarded", "trial_id": 11, "value": 5.706784745582598e-05}], "scale": "log"}, {"high": 1.0, "kind": "continuous", "low": 0.0, "name": "momentum", "points": [{"iteration": 0, "kind": "sample", "objective": 0.25768939931587226, "parent": null, "parent_value": null, "status": "ok", "trial_id": 0, "value": 0.605847029570968}, {"iteration": 0, "kind": "sample", "objective": 0.3597289140536063, "parent": null, "parent_value": null, "status": "ok", "trial_id": 1, "value": 0.6307144158739043}, {"iteration": 0, "kind": "sample", "objective": 0.0475112720543392, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 2, "value": 0.11240308334734228}, {"iteration": 0, "kind": "sample", "objective": 0.1362786619114635, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 3, "value": 0.19719273594494557}, {"iteration": 1, "kind": "mutate", "objective": 0.2474906470037498, "parent": 0, "parent_value": 0.605847029570968, "status": "discarded", "trial_id": 6, "value": 0.505847029570968}, {"iteration": 1, "kind": "mutate", "objective": 0.34466684602375725, "parent": 0, "parent_value": 0.605847029570968, "status": "ok", "trial_id": 7, "value": 0.705847029570968}, {"iteration": 2, "kind": "mutate", "objective": 0.2663730525062707, "parent": 4, "parent_value": 0.6307144158739043, "status": "discarded", "trial_id": 10, "value": 0.5307144158739043}, {"iteration": 2, "kind": "mutate", "objective": 0.3077753051433688, "parent": 4, "parent_value": 0.6307144158739043, "status": "discarded", "trial_id": 11, "value": 0.7307144158739043}], "scale": "linear"}, {"choices": ["relu", "tanh", "sigmoid"], "kind": "categorical", "name": "activation", "points": [{"iteration": 0, "kind": "sample", "objective": 0.25768939931587226, "parent": null, "parent_value": null, "status": "ok", "trial_id": 0, "value": "sigmoid"}, {"iteration": 0, "kind": "sample", "objective": 0.3597289140536063, "parent": null, "parent_value": null, "status": "ok", "trial_id": 1, "value": "sigmoid"}, {"iteration": 0, "kind": "sample", "objective": 0.0475112720543392, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 2, "value": "sigmoid"}, {"iteration": 0, "kind": "sample", "objective": 0.1362786619114635, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 3, "value": "sigmoid"}, {"iteration": 1, "kind": "mutate", "objective": 0.2474906470037498, "parent": 0, "parent_value": "sigmoid", "status": "discarded", "trial_id": 6, "value": "sigmoid"}, {"iteration": 1, "kind": "mutate", "objective": 0.34466684602375725, "parent": 0, "parent_value": "sigmoid", "status": "ok", "trial_id": 7, "value": "sigmoid"}, {"iteration": 2, "kind": "mutate", "objective": 0.2663730525062707, "parent": 4, "parent_value": "sigmoid", "status": "discarded", "trial_id": 10, "value": "sigmoid"}, {"iteration": 2, "kind": "mutate", "objective": 0.3077753051433688, "parent": 4, "parent_value": "sigmoid", "status": "discarded", "trial_id": 11, "value": "sigmoid"}]}], "peak": [{"best": 0.25768939931587226, "iteration": 0, "objective": 0.25768939931587226, "seq": 17, "trial_id": 0}, {"best": 0.3597289140536063, "iteration": 0, "objective": 0.3597289140536063, "seq": 18, "trial_id": 1}, {"best": 0.3597289140536063, "iteration": 0, "objective": 0.0475112720543392, "seq": 19, "trial_id": 2}, {"best": 0.3597289140536063, "iteration": 0, "objective": 0.1362786619114635, "seq": 20, "trial_id": 3}, {"best": 0.3597289140536063, "iteration": 1, "objective": 0.3597289140536063, "seq": 39, "trial_id": 4}, {"best": 0.3597289140536063, "iteration": 1, "objective": 0.25768939931587226, "seq": 40, "trial_id": 5}, {"best": 0.3597289140536063, "iteration": 1, "objective": 0.2474906470037498, "seq": 41, "trial_id": 6}, {"best": 0.3597289140536063, "iteration": 1, "objective": 0.34466684602375725, "seq": 42, "trial_id": 7}, {"best": 0.3597289140536063, "iteration": 2, "objective": 0.3597289140536063, "seq": 61, "trial_id": 8}, {"best": 0.3597289140536063, "iteration": 2, "objective": 0.34466684602375725, "seq": 62, "trial_id": 9}, {"best": 0.3597289140536063, "iteration": 2, "objective": 0.2663730525062707, "seq": 63, "trial_id": 10}, {"best": 0.3597289140536063, "iteration": 2, "objective": 0.3077753051433688, "seq": 64, "trial_id": 11}], "process_id": "s0001-p001", "schema_version": 1}, "importance": {"entries": [{"fraction": 0.9396632946257142, "std": 0.1748329194803477, "subset": ["momentum"]}, {"fraction": 0.04837492736765974, "std": 0.1732437811958957, "subset": ["lr"]}, {"fraction": 0.011961778006626823, "std": 0.018252315206044797, "subset": ["lr", "momentum"]}, {"fraction": 8.189150439318624e-16, "std": 2.65337933085537e-15, "subset": ["activation"]}, {"fraction": 3.17456103480195e-16, "std": 1.055178826465355e-15, "subset": ["lr", "activation"]}, {"fraction": 3.17456103480195e-16, "std": 1.055178826465355e-15, "subset": ["momentum", "activation"]}], "n_trials": 12, "notes": [], "process_id": "s0001-p001", "schema_version": 1, "total_variance": [0.006344522413968427, 0.00922318514779611, 0.013919651543599226, 0.0010447843518292393, 0.003963583330432695, 0.014551605844575724, 0.011892513478260258, 0.0026002742385820704, 0.0018202626167415498, 0.00618097051979434, 0.014509270278248818, 0.010679347142268363, 0.009485072355384878, 0.0032596945974052854, 0.008130028538254556, 0.012592386230742728, 0.009646747222633846, 0.0037825915569804497, 0.010797615127427808, 0.007619809624961768, 0.0027013672699901375, 0.002399136392309445, 0.005804826798666396, 0.003862815568855038, 0.008453819680337989, 0.0037409398788659093, 0.009646747222633846, 0.009213487041375201, 0.004823179758003893, 0.0020406405075968775, 0.009942107174553641, 0.010206518701075314, 0.00409240015234541, 0.013120650630433203, 0.009818483970492231, 0.003892220454660339, 0.008670663001303536, 0.007888830144904907, 0.004334301371252555, 0.0031729935929268316, 0.010191277268666324, 0.005985784620500048, 0.014313404842150566, 0.00851241809134827, 0.0064881997463200475, 0.0046847006716762285, 0.008587731501424105, 0.005742322897268309, 0.0037448178887385802, 0.001148433946577071, 0.004418832318492966, 0.0035244515065548793, 0.005769608659623178, 0.009848166102285776, 0.009852954300177609, 0.016154387925493743, 0.006218109946792977, 0.009127113988997987, 0.013030024428577654, 0.011598225788336324, 0.004122770493418554, 0.012966622437795866, 0.007502792196240685, 0.006278474409127377], "warning": "population-based processes blend several hyperparameter sets into one model; importance fractions for them are unreliable", "zero_variance": false}, "marginal": {"grid": [0.01, 0.03, 0.05, 0.07, 0.09, 0.11, 0.13, 0.15, 0.17, 0.19, 0.21, 0.23, 0.25, 0.27, 0.29, 0.31, 0.33, 0.35, 0.37, 0.39, 0.41, 0.43, 0.45, 0.47, 0.49, 0.51, 0.53, 0.55, 0.57, 0.59, 0.61, 0.63, 0.65, 0.67, 0.69, 0.71, 0.73, 0.75, 0.77, 0.79, 0.81, 0.83, 0.85, 0.87, 0.89, 0.91, 0.93, 0.95, 0.97, 0.99], "grid_native": [1.0964781961431843e-05, 1.3182567385564076e-05, 1.584893192461113e-05, 1.9054607179632484e-05, 2.290867652767773e-05, 2.754228703338164e-05, 3.311311214825912e-05, 3.98107170553497e-05, 4.786300923226385e-05, 5.754399373371567e-05, 6.918309709189369e-05, 8.317637711026709e-05, 9.999999999999991e-05, 0.00012022644346174131, 0.00014454397707459266, 0.0001737800828749376, 0.00020892961308540387, 0.00025118864315095774, 0.0003019951720402016, 0.00036307805477010167, 0.000436515832240166, 0.0005248074602497727, 0.0006309573444801935, 0.0007585775750291834, 0.0009120108393559095, 0.0010964781961431858, 0.0013182567385564082, 0.001584893192461115, 0.0019054607179632475, 0.0022908676527677737, 0.0027542287033381677, 0.003311311214825913, 0.003981071705534975, 0.004786300923226387, 0.00575439937337157, 0.006918309709189366, 0.008317637711026712, 0.010000000000000004, 0.012022644346174135, 0.014454397707459285, 0.01737800828749377, 0.020892961308540396, 0.025118864315095805, 0.03019951720402017, 0.03630780547701018, 0.04365158322401662, 0.05248074602497734, 0.06309573444801937, 0.07585775750291839, 0.09120108393559107], "mean": [0.2536882342724977, 0.2536882342724977, 0.2536882342724977, 0.2536882342724977, 0.2536882342724977, 0.2536882342724977, 0.2536882342724977, 0.24404147062569256, 0.24404147062569256, 0.24404147062569256, 0.24404147062569256, 0.24404147062569256, 0.24404147062569256, 0.24404147062569256, 0.24404147062569256, 0.24331690912649093, 0.24331690912649093, 0.24331690912649093, 0.24331690912649093, 0.24331690912649093, 0.24331690912649093, 0.24331690912649093, 0.24276938593130362, 0.24276938593130362, 0.24007547098970414, 0.24007547098970414, 0.24007547098970414, 0.24082328946802567, 0.24082328946802567, 0.24082328946802567, 0.24082328946802567, 0.24082328946802567, 0.24082328946802567, 0.24082328946802567, 0.24082328946802567, 0.24082328946802567, 0.24745794901979168, 0.24745794901979168, 0.24745794901979168, 0.24745794901979168, 0.24745794901979168, 0.24745794901979168, 0.24924883201571146, 0.24924883201571146, 0.24924883201571146, 0.24924883201571146, 0.24924883201571146, 0.24924883201571146, 0.24924883201571146, 0.24924883201571146], "params": ["lr"], "process_id": "s0001-p001", "schema_version": 1, "std": [0.02568775360032439, 0.02568775360032439, 0.02568775360032439, 0.02568775360032439, 0.02568775360032439, 0.02568775360032439, 0.02568775360032439, 0.02516566003592774, 0.02516566003592774, 0.02516566003592774, 0.02516566003592774, 0.02516566003592774, 0.02516566003592774, 0.02516566003592774, 0.02516566003592774, 0.024366647317423162, 0.024366647317423162, 0.024366647317423162, 0.024366647317423162, 0.024366647317423162, 0.024366647317423162, 0.024366647317423162, 0.024153477059972457, 0.024153477059972457, 0.025381919523570568, 0.025381919523570568, 0.025381919523570568, 0.02525199164700722, 0.02525199164700722, 0.02525199164700722, 0.02525199164700722, 0.02525199164700722, 0.02525199164700722, 0.02525199164700722, 0.02525199164700722, 0.02525199164700722, 0.027292573714699595, 0.027292573714699595, 0.027292573714699595, 0.027292573714699595, 0.027292573714699595, 0.027292573714699595, 0.0295906345383951, 0.0295906345383951, 0.0295906345383951, 0.0295906345383951, 0.0295906345383951, 0.0295906345383951, 0.0295906345383951, 0.0295906345383951]}, "metrics_example": {"name": "value", "points": [[1, 0.12884469965793613]], "schema_version": 1, "smoothed": [[1, 0.12884469965793613]], "trial_id": 0}, "parallel": {"axes": [{"high": 0.1, "kind": "continuous", "low": 1e-05, "name": "lr", "scale": "log"}, {"high": 1.0, "kind": "continuous", "low": 0.0, "name": "momentum", "scale": "linear"}, {"choices": ["relu", "tanh", "sigmoid"], "kind": "categorical", "name": "activation"}, {"high": 0.3597289140536063, "kind": "objective", "low": 0.0475112720543392, "name": "objective"}], "matrix": [[0.01331896124628499, 0.605847029570968, 2, 0.25768939931587226], [2.2719119280217482e-05, 0.6307144158739043, 2, 0.3597289140536063], [0.0004938791470616292, 0.11240308334734228, 2, 0.0475112720543392], [0.005057416716169009, 0.19719273594494557, 2, 0.1362786619114635], [2.2719119280217482e-05, 0.6307144158739043, 2, 0.3597289140536063], [0.01331896124628499, 0.605847029570968, 2, 0.25768939931587226], [0.03345571803634518, 0.505847029570968, 2, 0.2474906470037498], [0.03345571803634518, 0.705847029570968, 2, 0.34466684602375725], [2.2719119280217482e-05, 0.6307144158739043, 2, 0.3597289140536063], [0.03345571803634518, 0.705847029570968, 2, 0.34466684602375725], [5.706784745582598e-05, 0.5307144158739043, 2, 0.2663730525062707], [5.706784745582598e-05, 0.7307144158739043, 2, 0.3077753051433688]], "schema_version": 1, "trials": [{"process_id": "s0001-p001", "trial_id": 0}, {"process_id": "s0001-p001", "trial_id": 1}, {"process_id": "s0001-p001", "trial_id": 2}, {"process_id": "s0001-p001", "trial_id": 3}, {"process_id": "s0001-p001", "trial_id": 4}, {"process_id": "s0001-p001", "trial_id": 5}, {"process_id": "s0001-p001", "trial_id": 6}, {"process_id": "s0001-p001", "trial_id": 7}, {"process_id": "s0001-p001", "trial_id": 8}, {"process_id": "s0001-p001", "trial_id": 9}, {"process_id": "s0001-p001", "trial_id": 10}, {"process_id": "s0001-p001", "trial_id": 11}]}, "peak": [{"best": 0.25768939931587226, "iteration": 0, "objective": 0.25768939931587226, "seq": 17, "trial_id": 0}, {"best": 0.3597289140536063, "iteration": 0, "objective": 0.3597289140536063, "seq": 18, "trial_id": 1}, {"best": 0.3597289140536063, "iteration": 0, "objective": 0.0475112720543392, "seq": 19, "trial_id": 2}, {"best": 0.3597289140536063, "iteration": 0, "objective": 0.1362786619114635, "seq": 20, "trial_id": 3}, {"best": 0.3597289140536063, "iteration": 1, "objective": 0.3597289140536063, "seq": 39, "trial_id": 4}, {"best": 0.3597289140536063, "iteration": 1, "objective": 0.25768939931587226, "seq": 40, "trial_id": 5}, {"best": 0.3597289140536063, "iteration": 1, "objective": 0.2474906470037498, "seq": 41, "trial_id": 6}, {"best": 0.3597289140536063, "iteration": 1, "objective": 0.34466684602375725, "seq": 42, "trial_id": 7}, {"best": 0.3597289140536063, "iteration": 2, "objective": 0.3597289140536063, "seq": 61, "trial_id": 8}, {"best": 0.3597289140536063, "iteration": 2, "objective": 0.34466684602375725, "seq": 62, "trial_id": 9}, {"best": 0.3597289140536063, "iteration": 2, "objective": 0.2663730525062707, "seq": 63, "trial_id": 10}, {"best": 0.3597289140536063, "iteration": 2, "objective": 0.3077753051433688, "seq": 64, "trial_id": 11}], "process": {"config": {"algorithm": {"G": 3, "P": 4, "S": 0.5, "T": 1, "name": "pbt", "p_cat": 0.2, "perturb_mode": {"mode": "encoded_step", "step": 0.1}}, "budget": 12, "fixed": {}, "objective": {"direction": "maximize", "metric": "objective"}, "parallelism": 2, "per_trial_budget": 1, "schema_version": 1, "seed": 21, "space": {"params": [{"high": 0.1, "kind": "continuous", "low": 1e-05, "name": "lr", "scale": "log"}, {"high": 1.0, "kind": "continuous", "low": 0.0, "name": "momentum", "scale": "linear"}, {"choices": ["relu", "tanh", "sigmoid"], "kind": "categorical", "name": "activation"}]}, "worker": {"builtin": "noisy_additive", "timeout": 300.0}}, "process_id": "s0001-p001", "status": "finished", "study_id": "s0001"}, "study": {"created_at": 1786186110.930395, "name": "pbt-fixture", "process_ids": ["s0001-p001"], "study_id": "s0001", "v": 1}, "summary": {"name": "pbt-fixture", "processes": [{"algorithm": "pbt", "best_objective": 0.3597289140536063, "counts": {"discarded": 6, "ok": 6}, "direction": "maximize", "histograms": {"inference_ms": {"counts": [1, 1, 0, 0, 0, 0, 2, 0, 5, 3], "edges": [16.129, 16.7554, 17.381800000000002, 18.008200000000002, 18.634600000000002, 19.261000000000003, 19.8874, 20.5138, 21.1402, 21.7666, 22.393]}, "model_size": {"counts": [1, 1, 0, 0, 0, 0, 2, 0, 5, 3], "edges": [1112.897, 1175.5375999999999, 1238.1782, 1300.8188, 1363.4594, 1426.1, 1488.7406, 1551.3812, 1614.0218, 1676.6624000000002, 1739.303]}, "objective": {"counts": [1, 0, 1, 0, 0, 0, 3, 1, 1, 5], "edges": [0.0475112720543392, 0.0787330362542659, 0.10995480045419262, 0.14117656465411932, 0.17239832885404605, 0.20362009305397274, 0.23484185725389944, 0.26606362145382617, 0.2972853856537529, 0.32850714985367957, 0.3597289140536063]}}, "objective_mean": 0.2741106809549391, "objective_metric": "objective", "objective_std": 0.09342281527532569, "process_id": "s0001-p001", "status": "finished", "total_trials": 12}], "schema_version": 1, "study_id": "s0001"}, "tradeoff": {"points": [{"on_front": false, "process_id": "s0001-p001", "trial_id": 0, "x": 1619.166, "y": 0.25768939931587226}, {"on_front": true, "process_id": "s0001-p001", "trial_id": 1, "x": 1630.737, "y": 0.3597289140536063}, {"on_front": true, "process_id": "s0001-p001", "trial_id": 2, "x": 1112.897, "y": 0.0475112720543392}, {"on_front": true, "process_id": "s0001-p001", "trial_id": 3, "x": 1202.25, "y": 0.1362786619114635}, {"on_front": true, "process_id": "s0001-p001", "trial_id": 4, "x": 1630.737, "y": 0.3597289140536063}, {"on_front": false, "process_id": "s0001-p001", "trial_id": 5, "x": 1619.166, "y": 0.25768939931587226}, {"on_front": false, "process_id": "s0001-p001", "trial_id": 6, "x": 1539.303, "y": 0.2474906470037498}, {"on_front": false, "process_id": "s0001-p001", "trial_id": 7, "x": 1739.303, "y": 0.34466684602375725}, {"on_front": true, "process_id": "s0001-p001", "trial_id": 8, "x": 1630.737, "y": 0.3597289140536063}, {"on_front": false, "process_id": "s0001-p001", "trial_id": 9, "x": 1739.303, "y": 0.34466684602375725}, {"on_front": true, "process_id": "s0001-p001", "trial_id": 10, "x": 1530.771, "y": 0.2663730525062707}, {"on_front": false, "process_id": "s0001-p001", "trial_id": 11, "x": 1730.771, "y": 0.3077753051433688}], "schema_version": 1, "skipped": 0, "x": "model_size", "y": "objective"}, "trials": [{"assignment": {"activation": "sigmoid", "lr": 0.01331896124628499, "momentum": 0.605847029570968}, "aux": {"inference_ms": 21.192, "model_size": 1619.166}, "budget": 1, "budget_consumed": 1, "checkpoint_source": null, "created_at": 1786186110.9365218, "finished_at": 1786186110.9384518, "iteration": 0, "objective": 0.25768939931587226, "origin": "sampled", "parent": null, "process_id": "s0001-p001", "started_at": 1786186110.9367301, "status": "ok", "trial_id": 0, "v": 1}, {"assignment": {"activation": "sigmoid", "lr": 2.2719119280217482e-05, "momentum": 0.6307144158739043}, "aux": {"inference_ms": 21.307, "model_size": 1630.737}, "budget": 1, "budget_consumed": 1, "checkpoint_source": null, "created_at": 1786186110.9371507, "finished_at": 1786186110.9389496, "iteration": 0, "objective": 0.3597289140536063, "origin": "sampled", "parent": null, "process_id": "s0001-p001", "started_at": 1786186110.93737, "status": "ok", "trial_id": 1, "v": 1}, {"assignment": {"activation": "sigmoid", "lr": 0.0004938791470616292, "momentum": 0.11240308334734228}, "aux": {"inference_ms": 16.129, "model_size": 1112.897}, "budget": 1, "budget_consumed": 1, "checkpoint_source": null, "created_at": 1786186110.9399881, "finished_at": 1786186110.9415796, "iteration": 0, "objective": 0.0475112720543392, "origin": "sampled", "parent": null, "process_id": "s0001-p001", "started_at": 1786186110.940305, "status": "discarded", "trial_id": 2, "v": 1}, {"assignment": {"activation": "sigmoid", "lr": 0.005057416716169009, "momentum": 0.19719273594494557}, "aux": {"inference_ms": 17.023, "model_size": 1202.25}, "budget": 1, "budget_consumed": 1, "checkpoint_source": null, "created_at": 1786186110.94045, "finished_at": 1786186110.9424157, "iteration": 0, "objective": 0.1362786619114635, "origin": "sampled", "parent": null, "process_id": "s0001-p001", "started_at": 1786186110.9406133, "status": "discarded", "trial_id": 3, "v": 1}, {"assignment": {"activation": "sigmoid", "lr": 2.2719119280217482e-05, "momentum": 0.6307144158739043}, "aux": {"inference_ms": 21.307, "model_size": 1630.737}, "budget": 1, "budget_consumed": 1, "checkpoint_source": 1, "created_at": 1786186110.9443848, "finished_at": 1786186110.9465327, "iteration": 1, "objective": 0.3597289140536063, "origin": "promoted", "parent": 1, "process_id": "s0001-p001", "started_at": 1786186110.9444757, "status": "ok", "trial_id": 4, "v": 1}, {"assignment": {"activation": "sigmoid", "lr": 0.01331896124628499, "momentum": 0.605847029570968}, "aux": {"inference_ms": 21.192, "model_size": 1619.166}, "budget": 1, "budget_consumed": 1, "checkpoint_source": 0, "created_at": 1786186110.9446547, "finished_at": 1786186110.945738, "iteration": 1, "objective": 0.25768939931587226, "origin": "promoted", "parent": 0, "process_id": "s0001-p001", "started_at": 1786186110.9447093, "status": "discarded", "trial_id": 5, "v": 1}, {"assignment": {"activation": "sigmoid", "lr": 0.03345571803634518, "momentum": 0.505847029570968}, "aux": {"inference_ms": 20.393, "model_size": 1539.303}, "budget": 1, "budget_consumed": 1, "checkpoint_source": 0, "created_at": 1786186110.947357, "finished_at": 1786186110.948538, "iteration": 1, "objective": 0.2474906470037498, "origin": "mutated", "parent": 0, "process_id": "s0001-p001", "started_at": 1786186110.947553, "status": "discarded", "trial_id": 6, "v": 1}, {"assignment": {"activation": "sigmoid", "lr": 0.03345571803634518, "momentum": 0.705847029570968}, "aux": {"inference_ms": 22.393, "model_size": 1739.303}, "budget": 1, "budget_consumed": 1, "checkpoint_source": 0, "created_at": 1786186110.9482124, "finished_at": 1786186110.9498873, "iteration": 1, "objective": 0.34466684602375725, "origin": "mutated", "parent": 0, "process_id": "s0001-p001", "started_at": 1786186110.9483914, "status": "ok", "trial_id": 7, "v": 1}, {"assignment": {"activation": "sigmoid", "lr": 2.2719119280217482e-05, "momentum": 0.6307144158739043}, "aux": {"inference_ms": 21.307, "model_size": 1630.737}, "budget": 1, "budget_consumed": 1, "checkpoint_source": 4, "created_at": 1786186110.9518344, "finished_at": 1786186110.9530675, "iteration": 2, "objective": 0.3597289140536063, "origin": "promoted", "parent": 4, "process_id": "s0001-p001", "started_at": 1786186110.9520183, "status": "ok", "trial_id": 8, "v": 1}, {"assignment": {"activation": "sigmoid", "lr": 0.03345571803634518, "momentum": 0.705847029570968}, "aux": {"inference_ms": 22.393, "model_size": 1739.303}, "budget": 1, "budget_consumed": 1, "checkpoint_source": 7, "created_at": 1786186110.952777, "finished_at": 1786186110.9547513, "iteration": 2, "objective": 0.34466684602375725, "origin": "promoted", "parent": 7, "process_id": "s0001-p001", "started_at": 1786186110.952919, "status": "ok", "trial_id": 9, "v": 1}, {"assignment": {"activation": "sigmoid", "lr": 5.706784745582598e-05, "momentum": 0.5307144158739043}, "aux": {"inference_ms": 20.308, "model_size": 1530.771}, "budget": 1, "budget_consumed": 1, "checkpoint_source": 4, "created_at": 1786186110.954443, "finished_at": 1786186110.9568553, "iteration": 2, "objective": 0.2663730525062707, "origin": "mutated", "parent": 4, "process_id": "s0001-p001", "started_at": 1786186110.9546294, "status": "discarded", "trial_id": 10, "v": 1}, {"assignment": {"activation": "sigmoid", "lr": 5.706784745582598e-05, "momentum": 0.7307144158739043}, "aux": {"inference_ms": 22.308, "model_size": 1730.771}, "budget": 1, "budget_consumed": 1, "checkpoint_source": 4, "created_at": 1786186110.956516, "finished_at": 1786186110.9580727, "iteration": 2, "objective": 0.3077753051433688, "origin": "mutated", "parent": 4, "process_id": "s0001-p001", "started_at": 1786186110.9567106, "status": "discarded", "trial_id": 11, "v": 1}]} as const;
export const hyperband_r9_eta3 = {"events": [{"budget": 1, "iteration": 0, "kind": "sample", "note": null, "objective": null, "parent": null, "seq": 2, "trial_id": 0}, {"budget": 1, "iteration": 0, "kind": "sample", "note": null, "objective": null, "parent": null, "seq": 5, "trial_id": 1}, {"budget": 1, "iteration": 0, "kind": "sample", "note": null, "objective": null, "parent": null, "seq": 10, "trial_id": 2}, {"budget": 1, "iteration": 0, "kind": "sample", "note": null, "objective": null, "parent": null, "seq": 13, "trial_id": 3}, {"budget": 1, "iteration": 0, "kind": "sample", "note": null, "objective": null, "parent": null, "seq": 18, "trial_id": 4}, {"budget": 1, "iteration": 0, "kind": "sample", "note": null, "objective": null, "parent": null, "seq": 21, "trial_id": 5}, {"budget": 1, "iteration": 0, "kind": "sample", "note": null, "objective": null, "parent": null, "seq": 26, "trial_id": 6}, {"budget": 1, "iteration": 0, "kind": "sample", "note": null, "objective": null, "parent": null, "seq": 29, "trial_id": 7}, {"budget": 1, "iteration": 0, "kind": "sample", "note": null, "objective": null, "parent": null, "seq": 34, "trial_id": 8}, {"budget": 1, "iteration": 0, "kind": "evaluate", "note": null, "objective": 0.13971310127722014, "parent": null, "seq": 37, "trial_id": 0}, {"budget": 1, "iteration": 0, "kind": "evaluate", "note": null, "objective": 0.34432928741828894, "parent": null, "seq": 38, "trial_id": 1}, {"budget": 1, "iteration": 0, "kind": "evaluate", "note": null, "objective": 0.42591835929257305, "parent": null, "seq": 39, "trial_id": 2}, {"budget": 1, "iteration": 0, "kind": "evaluate", "note": null, "objective": 0.328177625849232, "parent": null, "seq": 40, "trial_id": 3}, {"budget": 1, "iteration": 0, "kind": "evaluate", "note": null, "objective": 0.10765609166095771, "parent": null, "seq": 41, "trial_id": 4}, {"budget": 1, "iteration": 0, "kind": "evaluate", "note": null, "objective": 0.2863980878217973, "parent": null, "seq": 42, "trial_id": 5}, {"budget": 1, "iteration": 0, "kind": "evaluate", "note": null, "objective": 0.47928488226131866, "parent": null, "seq": 43, "trial_id": 6}, {"budget": 1, "iteration": 0, "kind": "evaluate", "note": null, "objective": 0.08265615076514377, "parent": null, "seq": 44, "trial_id": 7}, {"budget": 1, "iteration": 0, "kind": "evaluate", "note": null, "objective": 0.21458746162834222, "parent": null, "seq": 45, "trial_id": 8}, {"budget": 1, "iteration": 0, "kind": "survive", "note": null, "objective": 0.47928488226131866, "parent": null, "seq": 46, "trial_id": 6}, {"budget": 1, "iteration": 0, "kind": "survive", "note": null, "objective": 0.42591835929257305, "parent": null, "seq": 47, "trial_id": 2}, {"budget": 1, "iteration": 0, "kind": "survive", "note": null, "objective": 0.34432928741828894, "parent": null, "seq": 48, "trial_id": 1}, {"budget": 1, "iteration": 0, "kind": "discard", "note": null, "objective": 0.13971310127722014, "parent": null, "seq": 49, "trial_id": 0}, {"budget": 1, "iteration": 0, "kind": "discard", "note": null, "objective": 0.328177625849232, "parent": null, "seq": 50, "trial_id": 3}, {"budget": 1, "iteration": 0, "kind": "discard", "note": null, "objective": 0.10765609166095771, "parent": null, "seq": 51, "trial_id": 4}, {"budget": 1, "iteration": 0, "kind": "discard", "note": null, "objective": 0.2863980878217973, "parent": null, "seq": 52, "trial_id": 5}, {"budget": 1, "iteration": 0, "kind": "discard", "note": null, "objective": 0.08265615076514377, "parent": null, "seq": 53, "trial_id": 7}, {"budget": 1, "iteration": 0, "kind": "discard", "note": null, "objective": 0.21458746162834222, "parent": null, "seq": 54, "trial_id": 8}, {"budget": 3, "iteration": 1, "kind": "evaluate", "note": null, "objective": 0.47928488226131866, "parent": null, "seq": 64, "trial_id": 9}, {"budget": 3, "iteration": 1, "kind": "evaluate", "note": null, "objective": 0.42591835929257305, "parent": null, "seq": 65, "trial_id": 10}, {"budget": 3, "iteration": 1, "kind": "evaluate", "note": null, "objective": 0.34432928741828894, "parent": null, "seq": 66, "trial_id": 11}, {"budget": 3, "iteration": 1, "kind": "survive", "note": null, "objective": 0.47928488226131866, "parent": null, "seq": 67, "trial_id": 9}, {"budget": 3, "iteration": 1, "kind": "discard", "note": null, "objective": 0.42591835929257305, "parent": null, "seq": 68, "trial_id": 10}, {"budget": 3, "iteration": 1, "kind": "discard", "note": null, "objective": 0.34432928741828894, "parent": null, "seq": 69, "trial_id": 11}, {"budget": 9, "iteration": 2, "kind": "evaluate", "note": null, "objective": 0.47928488226131866, "parent": null, "seq": 73, "trial_id": 12}, {"budget": 9, "iteration": 2, "kind": "discard", "note": null, "objective": 0.47928488226131866, "parent": null, "seq": 74, "trial_id": 12}, {"budget": 3, "iteration": 3, "kind": "sample", "note": null, "objective": null, "parent": null, "seq": 76, "trial_id": 13}, {"budget": 3, "iteration": 3, "kind": "sample", "note": null, "objective": null, "parent": null, "seq": 79, "trial_id": 14}, {"budget": 3, "iteration": 3, "kind": "sample", "note": null, "objective": null, "parent": null, "seq": 83, "trial_id": 15}, {"budget": 3, "iteration": 3, "kind": "sample", "note": null, "objective": null, "parent": null, "seq": 87, "trial_id": 16}, {"budget": 3, "iteration": 3, "kind": "sample", "note": null, "objective": null, "parent": null, "seq": 91, "trial_id": 17}, {"budget": 3, "iteration": 3, "kind": "evaluate", "note": null, "objective": 0.36645072865254913, "parent": null, "seq": 95, "trial_id": 13}, {"budget": 3, "iteration": 3, "kind": "evaluate", "note": null, "objective": 0.19996766613022585, "parent": null, "seq": 96, "trial_id": 14}, {"budget": 3, "iteration": 3, "kind": "evaluate", "note": null, "objective": 0.43733518231444657, "parent": null, "seq": 97, "trial_id": 15}, {"budget": 3, "iteration": 3, "kind": "evaluate", "note": null, "objective": 0.034913495902178515, "parent": null, "seq": 98, "trial_id": 16}, {"budget": 3, "iteration": 3, "kind": "evaluate", "note": null, "objective": 0.26313342976676535, "parent": null, "seq": 99, "trial_id": 17}, {"budget": 3, "iteration": 3, "kind": "survive", "note": null, "objective": 0.43733518231444657, "parent": null, "seq": 100, "trial_id": 15}, {"budget": 3, "iteration": 3, "kind": "discard", "note": null, "objective": 0.36645072865254913, "parent": null, "seq": 101, "trial_id": 13}, {"budget": 3, "iteration": 3, "kind": "discard", "note": null, "objective": 0.19996766613022585, "parent": null, "seq": 102, "trial_id": 14}, {"budget": 3, "iteration": 3, "kind": "discard", "note": null, "objective": 0.034913495902178515, "parent": null, "seq": 103, "trial_id": 16}, {"budget": 3, "iteration": 3, "kind": "discard", "note": null, "objective": 0.26313342976676535, "parent": null, "seq": 104, "trial_id": 17}, {"budget": 9, "iteration": 4, "kind": "evaluate", "note": null, "objective": 0.43733518231444657, "parent": null, "seq": 108, "trial_id": 18}, {"budget": 9, "iteration": 4, "kind": "discard", "note": null, "objective": 0.43733518231444657, "parent": null, "seq": 109, "trial_id": 18}, {"budget": 9, "iteration": 5, "kind": "sample", "note": null, "objective": null, "parent": null, "seq": 111, "trial_id": 19}, {"budget": 9, "iteration": 5, "kind": "sample", "note": null, "objective": null, "parent": null, "seq": 114, "trial_id": 20}, {"budget": 9, "iteration": 5, "kind": "sample", "note": null, "objective": null, "parent": null, "seq": 119, "trial_id": 21}, {"budget": 9, "iteration": 5, "kind": "evaluate", "note": null, "objective": 0.4892300018334832, "parent": null, "seq": 122, "trial_id": 19}, {"budget": 9, "iteration": 5, "kind": "evaluate", "note": null, "objective": 0.3789369199575975, "parent": null, "seq": 123, "trial_id": 20}, {"budget": 9, "iteration": 5, "kind": "evaluate", "note": null, "objective": 0.39894605808334177, "parent": null, "seq": 124, "trial_id": 21}, {"budget": 9, "iteration": 5, "kind": "discard", "note": null, "objective": 0.4892300018334832, "parent": null, "seq": 125, "trial_id": 19}, {"budget": 9, "iteration": 5, "kind": "discard", "note": null, "objective": 0.3789369199575975, "parent": null, "seq": 126, "trial_id": 20}, {"budget": 9, "iteration": 5, "kind": "discard", "note": null, "objective": 0.39894605808334177, "parent": null, "seq": 127, "trial_id": 21}], "exploration": {"chains": [{"points": [{"budget": 1, "iteration": 0, "objective": 0.34432928741828894, "trial_id": 1}, {"budget": 3, "iteration": 1, "objective": 0.34432928741828894, "trial_id": 11}], "trial_ids": [1, 11], "values": {"activation": "sigmoid", "lr": 0.004099838509312262, "momentum": 0.45933704474394677}}, {"points": [{"budget": 1, "iteration": 0, "objective": 0.42591835929257305, "trial_id": 2}, {"budget": 3, "iteration": 1, "objective": 0.42591835929257305, "trial_id": 10}], "trial_ids": [2, 10], "values": {"activation": "relu", "lr": 0.025484274795284617, "momentum": 0.8369613232370445}}, {"points": [{"budget": 1, "iteration": 0, "objective": 0.47928488226131866, "trial_id": 6}, {"budget": 3, "iteration": 1, "objective": 0.47928488226131866, "trial_id": 9}, {"budget": 9, "iteration": 2, "objective": 0.47928488226131866, "trial_id": 12}], "trial_ids": [6, 9, 12], "values": {"activation": "tanh", "lr": 0.00029942115010908143, "momentum": 0.9148444266975111}}, {"points": [{"budget": 3, "iteration": 3, "objective": 0.43733518231444657, "trial_id": 15}, {"budget": 9, "iteration": 4, "objective": 0.43733518231444657, "trial_id": 18}], "trial_ids": [15, 18], "values": {"activation": "sigmoid", "lr": 0.006582049595075165, "momentum": 0.8583934274602852}}], "links": [], "params": [{"high": 0.1, "kind": "continuous", "low": 1e-05, "name": "lr", "points": [{"iteration": 0, "kind": "sample", "objective": 0.13971310127722014, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 0, "value": 0.0002920032342329088}, {"iteration": 0, "kind": "sample", "objective": 0.34432928741828894, "parent": null, "parent_value": null, "status": "ok", "trial_id": 1, "value": 0.004099838509312262}, {"iteration": 0, "kind": "sample", "objective": 0.42591835929257305, "parent": null, "parent_value": null, "status": "ok", "trial_id": 2, "value": 0.025484274795284617}, {"iteration": 0, "kind": "sample", "objective": 0.328177625849232, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 3, "value": 0.0016648711263076027}, {"iteration": 0, "kind": "sample", "objective": 0.10765609166095771, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 4, "value": 0.0008115435134164091}, {"iteration": 0, "kind": "sample", "objective": 0.2863980878217973, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 5, "value": 0.015419380691908176}, {"iteration": 0, "kind": "sample", "objective": 0.47928488226131866, "parent": null, "parent_value": null, "status": "ok", "trial_id": 6, "value": 0.00029942115010908143}, {"iteration": 0, "kind": "sample", "objective": 0.08265615076514377, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 7, "value": 5.6149182252863545e-05}, {"iteration": 0, "kind": "sample", "objective": 0.21458746162834222, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 8, "value": 0.004679763864660564}, {"iteration": 3, "kind": "sample", "objective": 0.36645072865254913, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 13, "value": 0.0012530149497058127}, {"iteration": 3, "kind": "sample", "objective": 0.19996766613022585, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 14, "value": 0.002307786397351249}, {"iteration": 3, "kind": "sample", "objective": 0.43733518231444657, "parent": null, "parent_value": null, "status": "ok", "trial_id": 15, "value": 0.006582049595075165}, {"iteration": 3, "kind": "sample", "objective": 0.034913495902178515, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 16, "value": 0.00047672058185872166}, {"iteration": 3, "kind": "sample", "objective": 0.26313342976676535, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 17, "value": 0.001603461141517371}, {"iteration": 5, "kind": "sample", "objective": 0.4892300018334832, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 19, "value": 0.05911261424969761}, {"iteration": 5, "kind": "sample", "objective": 0.3789369199575975, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 20, "value": 0.0896800117102206}, {"iteration": 5, "kind": "sample", "objective": 0.39894605808334177, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 21, "value": 7.899758658491659e-05}], "scale": "log"}, {"high": 1.0, "kind": "continuous", "low": 0.0, "name": "momentum", "points": [{"iteration": 0, "kind": "sample", "objective": 0.13971310127722014, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 0, "value": 0.1992953793750829}, {"iteration": 0, "kind": "sample", "objective": 0.34432928741828894, "parent": null, "parent_value": null, "status": "ok", "trial_id": 1, "value": 0.45933704474394677}, {"iteration": 0, "kind": "sample", "objective": 0.42591835929257305, "parent": null, "parent_value": null, "status": "ok", "trial_id": 2, "value": 0.8369613232370445}, {"iteration": 0, "kind": "sample", "objective": 0.328177625849232, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 3, "value": 0.6074645263526672}, {"iteration": 0, "kind": "sample", "objective": 0.10765609166095771, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 4, "value": 0.3295638093050687}, {"iteration": 0, "kind": "sample", "objective": 0.2863980878217973, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 5, "value": 0.4208988897395992}, {"iteration": 0, "kind": "sample", "objective": 0.47928488226131866, "parent": null, "parent_value": null, "status": "ok", "trial_id": 6, "value": 0.9148444266975111}, {"iteration": 0, "kind": "sample", "objective": 0.08265615076514377, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 7, "value": 0.06673615504684005}, {"iteration": 0, "kind": "sample", "objective": 0.21458746162834222, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 8, "value": 0.4128095842692784}, {"iteration": 3, "kind": "sample", "objective": 0.36645072865254913, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 13, "value": 0.7974343080247323}, {"iteration": 3, "kind": "sample", "objective": 0.19996766613022585, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 14, "value": 0.41249657654728344}, {"iteration": 3, "kind": "sample", "objective": 0.43733518231444657, "parent": null, "parent_value": null, "status": "ok", "trial_id": 15, "value": 0.8583934274602852}, {"iteration": 3, "kind": "sample", "objective": 0.034913495902178515, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 16, "value": 0.08710748429584014}, {"iteration": 3, "kind": "sample", "objective": 0.26313342976676535, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 17, "value": 0.6588492958364527}, {"iteration": 5, "kind": "sample", "objective": 0.4892300018334832, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 19, "value": 0.7146202136179531}, {"iteration": 5, "kind": "sample", "objective": 0.3789369199575975, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 20, "value": 0.6208241009193699}, {"iteration": 5, "kind": "sample", "objective": 0.39894605808334177, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 21, "value": 0.6852431498370474}], "scale": "linear"}, {"choices": ["relu", "tanh", "sigmoid"], "kind": "categorical", "name": "activation", "points": [{"iteration": 0, "kind": "sample", "objective": 0.13971310127722014, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 0, "value": "relu"}, {"iteration": 0, "kind": "sample", "objective": 0.34432928741828894, "parent": null, "parent_value": null, "status": "ok", "trial_id": 1, "value": "sigmoid"}, {"iteration": 0, "kind": "sample", "objective": 0.42591835929257305, "parent": null, "parent_value": null, "status": "ok", "trial_id": 2, "value": "relu"}, {"iteration": 0, "kind": "sample", "objective": 0.328177625849232, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 3, "value": "relu"}, {"iteration": 0, "kind": "sample", "objective": 0.10765609166095771, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 4, "value": "relu"}, {"iteration": 0, "kind": "sample", "objective": 0.2863980878217973, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 5, "value": "relu"}, {"iteration": 0, "kind": "sample", "objective": 0.47928488226131866, "parent": null, "parent_value": null, "status": "ok", "trial_id": 6, "value": "tanh"}, {"iteration": 0, "kind": "sample", "objective": 0.08265615076514377, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 7, "value": "tanh"}, {"iteration": 0, "kind": "sample", "objective": 0.21458746162834222, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 8, "value": "sigmoid"}, {"iteration": 3, "kind": "sample", "objective": 0.36645072865254913, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 13, "value": "tanh"}, {"iteration": 3, "kind": "sample", "objective": 0.19996766613022585, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 14, "value": "relu"}, {"iteration": 3, "kind": "sample", "objective": 0.43733518231444657, "parent": null, "parent_value": null, "status": "ok", "trial_id": 15, "value": "sigmoid"}, {"iteration": 3, "kind": "sample", "objective": 0.034913495902178515, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 16, "value": "relu"}, {"iteration": 3, "kind": "sample", "objective": 0.26313342976676535, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 17, "value": "relu"}, {"iteration": 5, "kind": "sample", "objective": 0.4892300018334832, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 19, "value": "sigmoid"}, {"iteration": 5, "kind": "sample", "objective": 0.3789369199575975, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 20, "value": "tanh"}, {"iteration": 5, "kind": "sample", "objective": 0.39894605808334177, "parent": null, "parent_value": null, "status": "discarded", "trial_id": 21, "value": "sigmoid"}]}], "peak": [{"best": 0.13971310127722014, "iteration": 0, "objective": 0.13971310127722014, "seq": 37, "trial_id": 0}, {"best": 0.34432928741828894, "iteration": 0, "objective": 0.34432928741828894, "seq": 38, "trial_id": 1}, {"best": 0.42591835929257305, "iteration": 0, "objective": 0.42591835929257305, "seq": 39, "trial_id": 2}, {"best": 0.42591835929257305, "iteration": 0, "objective": 0.328177625849232, "seq": 40, "trial_id": 3}, {"best": 0.42591835929257305, "iteration": 0, "objective": 0.10765609166095771, "seq": 41, "trial_id": 4}, {"best": 0.42591835929257305, "iteration": 0, "objective": 0.2863980878217973, "seq": 42, "trial_id": 5}, {"best": 0.47928488226131866, "iteration": 0, "objective": 0.47928488226131866, "seq": 43, "trial_id": 6}, {"best": 0.47928488226131866, "iteration": 0, "objective": 0.08265615076514377, "seq": 44, "trial_id": 7}, {"best": 0.47928488226131866, "iteration": 0, "objective": 0.21458746162834222, "seq": 45, "trial_id": 8}, {"best": 0.47928488226131866, "iteration": 1, "objective": 0.47928488226131866, "seq": 64, "trial_id": 9}, {"best": 0.47928488226131866, "iteration": 1, "objective": 0.42591835929257305, "seq": 65, "trial_id": 10}, {"best": 0.47928488226131866, "iteration": 1, "objective": 0.34432928741828894, "seq": 66, "trial_id": 11}, {"best": 0.47928488226131866, "iteration": 2, "objective": 0.47928488226131866, "seq": 73, "trial_id": 12}, {"best": 0.47928488226131866, "iteration": 3, "objective": 0.36645072865254913, "seq": 95, "trial_id": 13}, {"best": 0.47928488226131866, "iteration": 3, "objective": 0.19996766613022585, "seq": 96, "trial_id": 14}, {"best": 0.47928488226131866, "iteration": 3, "objective": 0.43733518231444657, "seq": 97, "trial_id": 15}, {"best": 0.47928488226131866, "iteration": 3, "objective": 0.034913495902178515, "seq": 98, "trial_id": 16}, {"best": 0.47928488226131866, "iteration": 3, "objective": 0.26313342976676535, "seq": 99, "trial_id": 17}, {"best": 0.47928488226131866, "iteration": 4, "objective": 0.43733518231444657, "seq": 108, "trial_id": 18}, {"best": 0.4892300018334832, "iteration": 5, "objective": 0.4892300018334832, "seq": 122, "trial_id": 19}, {"best": 0.4892300018334832, "iteration": 5, "objective": 0.3789369199575975, "seq": 123, "trial_id": 20}, {"best": 0.4892300018334832, "iteration": 5, "objective": 0.39894605808334177, "seq": 124, "trial_id": 21}], "process_id": "s0001-p001", "schema_version": 1}, "importance": {"entries": [{"fraction": 0.9212166398250364, "std": 0.1337584336872352, "subset": ["momentum"]}, {"fraction": 0.0433735233778265, "std": 0.12701035268894834, "subset": ["lr"]}, {"fraction": 0.0306243034009367, "std": 0.027598051468548112, "subset": ["lr", "momentum"]}, {"fraction": 0.002745466705351465, "std": 0.0051797596075680765, "subset": ["momentum", "activation"]}, {"fraction": 0.0015280779560698059, "std": 0.0030088325040927098, "subset": ["activation"]}, {"fraction": 0.00029215733901261516, "std": 0.0013254103524182564, "subset": ["lr", "activation"]}], "n_trials": 22, "notes": [], "process_id": "s0001-p001", "schema_version": 1, "total_variance": [0.016713135891695596, 0.015997343119528565, 0.012370179100707146, 0.01292230979088839, 0.023195122199847887, 0.015826723304013468, 0.023273984519353863, 0.02556772746980754, 0.02380376055212105, 0.014441179560431186, 0.020509778313802268, 0.023215654003905115, 0.02090187694459933, 0.021097659366485055, 0.02003000006206984, 0.015294548774710717, 0.015253560148390119, 0.016603887487776123, 0.01883906510736459, 0.01865450100268734, 0.020378913728240508, 0.020705689289370804, 0.016794991394072492, 0.02313687369988146, 0.020903190628341672, 0.022714357614058447, 0.014857255613889633, 0.019038841214210858, 0.0219250413289684, 0.018181559291824537, 0.01870176766620503, 0.02310890721391539, 0.024567043261289626, 0.02102421802036593, 0.018121904981318396, 0.01838475284489162, 0.026082921993554165, 0.01999258185820882, 0.0163082016591046, 0.020133710825355075, 0.019346227497749308, 0.01925155112744696, 0.02025042959620854, 0.01725860098426646, 0.010055106724315074, 0.022141367330112405, 0.02109269699648765, 0.019656442605715793, 0.02407068995737155, 0.010774837267656268, 0.011219274250751615, 0.017951754057594693, 0.025234264649279303, 0.008499427393525244, 0.020847519968773584, 0.022204396798433765, 0.021051479660696593, 0.020042413536278877, 0.019230350374592142, 0.01982187619732413, 0.01833384618627676, 0.027345472473529267, 0.015121269404304555, 0.019063761208723176], "warning": null, "zero_variance": false}, "marginal": {"grid": [0.01, 0.03, 0.05, 0.07, 0.09, 0.11, 0.13, 0.15, 0.17, 0.19, 0.21, 0.23, 0.25, 0.27, 0.29, 0.31, 0.33, 0.35, 0.37, 0.39, 0.41, 0.43, 0.45, 0.47, 0.49, 0.51, 0.53, 0.55, 0.57, 0.59, 0.61, 0.63, 0.65, 0.67, 0.69, 0.71, 0.73, 0.75, 0.77, 0.79, 0.81, 0.83, 0.85, 0.87, 0.89, 0.91, 0.93, 0.95, 0.97, 0.99], "grid_native": [1.0964781961431843e-05, 1.3182567385564076e-05, 1.584893192461113e-05, 1.9054607179632484e-05, 2.290867652767773e-05, 2.754228703338164e-05, 3.311311214825912e-05, 3.98107170553497e-05, 4.786300923226385e-05, 5.754399373371567e-05, 6.918309709189369e-05, 8.317637711026709e-05, 9.999999999999991e-05, 0.00012022644346174131, 0.00014454397707459266, 0.0001737800828749376, 0.00020892961308540387, 0.00025118864315095774, 0.0003019951720402016, 0.00036307805477010167, 0.000436515832240166, 0.0005248074602497727, 0.0006309573444801935, 0.0007585775750291834, 0.0009120108393559095, 0.0010964781961431858, 0.0013182567385564082, 0.001584893192461115, 0.0019054607179632475, 0.0022908676527677737, 0.0027542287033381677, 0.003311311214825913, 0.003981071705534975, 0.004786300923226387, 0.00575439937337157, 0.006918309709189366, 0.008317637711026712, 0.010000000000000004, 0.012022644346174135, 0.014454397707459285, 0.01737800828749377, 0.020892961308540396, 0.025118864315095805, 0.03019951720402017, 0.03630780547701018, 0.04365158322401662, 0.05248074602497734, 0.06309573444801937, 0.07585775750291839, 0.09120108393559107], "mean": [0.26293498686282163, 0.26293498686282163, 0.26293498686282163, 0.26293498686282163, 0.26293498686282163, 0.26293498686282163, 0.26293498686282163, 0.26293498686282163, 0.26293498686282163, 0.26293498686282163, 0.26293498686282163, 0.26293498686282163, 0.26293498686282163, 0.26293498686282163, 0.26395045021381486, 0.26457238849534276, 0.26457238849534276, 0.2647427292311069, 0.2647427292311069, 0.2647427292311069, 0.2640836810768309, 0.2645962637020605, 0.26478919037364584, 0.2650009760016101, 0.2650009760016101, 0.2715081726529119, 0.2769379795938566, 0.285782254265206, 0.28758245471042787, 0.28991865193896416, 0.2912192091832017, 0.29484339194015236, 0.29484339194015236, 0.29484339194015236, 0.2978271580567042, 0.2978271580567042, 0.2978271580567042, 0.298460303194257, 0.2991249197377882, 0.2996530896105787, 0.2996530896105787, 0.29990575608880105, 0.29990575608880105, 0.29990575608880105, 0.29990575608880105, 0.30056501495680404, 0.30056501495680404, 0.30056501495680404, 0.30056501495680404, 0.30056501495680404], "params": ["lr"], "process_id": "s0001-p001", "schema_version": 1, "std": [0.03243203783248122, 0.03243203783248122, 0.03243203783248122, 0.03243203783248122, 0.03243203783248122, 0.03243203783248122, 0.03243203783248122, 0.03243203783248122, 0.03243203783248122, 0.03243203783248122, 0.03243203783248122, 0.03243203783248122, 0.03243203783248122, 0.03243203783248122, 0.03224424663874612, 0.03131514887451651, 0.03131514887451651, 0.03126329400106986, 0.03126329400106986, 0.03126329400106986, 0.03416185911851796, 0.03452534826449758, 0.03360888685251367, 0.03362068178348906, 0.03362068178348906, 0.027766961540976062, 0.024248274842633234, 0.025142441463169407, 0.02535849863353174, 0.025421920291386766, 0.02522865927405539, 0.02524270822690064, 0.02524270822690064, 0.02524270822690064, 0.03000186237226853, 0.03000186237226853, 0.03000186237226853, 0.03048043335661519, 0.030305663248621176, 0.030852422137832205, 0.030852422137832205, 0.030597639535595692, 0.030597639535595692, 0.030597639535595692, 0.030597639535595692, 0.030372665563559813, 0.030372665563559813, 0.030372665563559813, 0.030372665563559813, 0.030372665563559813]}, "metrics_example": {"name": "value", "points": [[1, 0.06985655063861007]], "schema_version": 1, "smoothed": [[1, 0.06985655063861007]], "trial_id": 0}, "parallel": {"axes": [{"high": 0.1, "kind": "continuous", "low": 1e-05, "name": "lr", "scale": "log"}, {"high": 1.0, "kind": "continuous", "low": 0.0, "name": "momentum", "scale": "linear"}, {"choices": ["relu", "tanh", "sigmoid"], "kind": "categorical", "name": "activation"}, {"high": 0.4892300018334832, "kind": "objective", "low": 0.034913495902178515, "name": "objective"}], "matrix": [[0.0002920032342329088, 0.1992953793750829, 0, 0.13971310127722014], [0.004099838509312262, 0.45933704474394677, 2, 0.34432928741828894], [0.025484274795284617, 0.8369613232370445, 0, 0.42591835929257305], [0.0016648711263076027, 0.6074645263526672, 0, 0.328177625849232], [0.0008115435134164091, 0.3295638093050687, 0, 0.10765609166095771], [0.015419380691908176, 0.4208988897395992, 0, 0.2863980878217973], [0.00029942115010908143, 0.9148444266975111, 1, 0.47928488226131866], [5.6149182252863545e-05, 0.06673615504684005, 1, 0.08265615076514377], [0.004679763864660564, 0.4128095842692784, 2, 0.21458746162834222], [0.00029942115010908143, 0.9148444266975111, 1, 0.47928488226131866], [0.025484274795284617, 0.8369613232370445, 0, 0.42591835929257305], [0.004099838509312262, 0.45933704474394677, 2, 0.34432928741828894], [0.00029942115010908143, 0.9148444266975111, 1, 0.47928488226131866], [0.0012530149497058127, 0.7974343080247323, 1, 0.36645072865254913], [0.002307786397351249, 0.41249657654728344, 0, 0.19996766613022585], [0.006582049595075165, 0.8583934274602852, 2, 0.43733518231444657], [0.00047672058185872166, 0.08710748429584014, 0, 0.034913495902178515], [0.001603461141517371, 0.6588492958364527, 0, 0.26313342976676535], [0.006582049595075165, 0.8583934274602852, 2, 0.43733518231444657], [0.05911261424969761, 0.7146202136179531, 2, 0.4892300018334832], [0.0896800117102206, 0.6208241009193699, 1, 0.3789369199575975], [7.899758658491659e-05, 0.6852431498370474, 2, 0.39894605808334177]], "schema_version": 1, "trials": [{"process_id": "s0001-p001", "trial_id": 0}, {"process_id": "s0001-p001", "trial_id": 1}, {"process_id": "s0001-p001", "trial_id": 2}, {"process_id": "s0001-p001", "trial_id": 3}, {"process_id": "s0001-p001", "trial_id": 4}, {"process_id": "s0001-p001", "trial_id": 5}, {"process_id": "s0001-p001", "trial_id": 6}, {"process_id": "s0001-p001", "trial_id": 7}, {"process_id": "s0001-p001", "trial_id": 8}, {"process_id": "s0001-p001", "trial_id": 9}, {"process_id": "s0001-p001", "trial_id": 10}, {"process_id": "s0001-p001", "trial_id": 11}, {"process_id": "s0001-p001", "trial_id": 12}, {"process_id": "s0001-p001", "trial_id": 13}, {"process_id": "s0001-p001", "trial_id": 14}, {"process_id": "s0001-p001", "trial_id": 15}, {"process_id": "s0001-p001", "trial_id": 16}, {"process_id": "s0001-p001", "trial_id": 17}, {"process_id": "s0001-p001", "trial_id": 18}, {"process_id": "s0001-p001", "trial_id": 19}, {"process_id": "s0001-p001", "trial_id": 20}, {"process_id": "s0001-p001", "trial_id": 21}]}, "peak": [{"best": 0.13971310127722014, "iteration": 0, "objective": 0.13971310127722014, "seq": 37, "trial_id": 0}, {"best": 0.34432928741828894, "iteration": 0, "objective": 0.34432928741828894, "seq": 38, "trial_id": 1}, {"best": 0.42591835929257305, "iteration": 0, "objective": 0.42591835929257305, "seq": 39, "trial_id": 2}, {"best": 0.42591835929257305, "iteration": 0, "objective": 0.328177625849232, "seq": 40, "trial_id": 3}, {"best": 0.42591835929257305, "iteration": 0, "objective": 0.10765609166095771, "seq": 41, "trial_id": 4}, {"best": 0.42591835929257305, "iteration": 0, "objective": 0.2863980878217973, "seq": 42, "trial_id": 5}, {"best": 0.47928488226131866, "iteration": 0, "objective": 0.47928488226131866, "seq": 43, "trial_id": 6}, {"best": 0.47928488226131866, "iteration": 0, "objective": 0.08265615076514377, "seq": 44, "trial_id": 7}, {"best": 0.47928488226131866, "iteration": 0, "objective": 0.21458746162834222, "seq": 45, "trial_id": 8}, {"best": 0.47928488226131866, "iteration": 1, "objective": 0.47928488226131866, "seq": 64, "trial_id": 9}, {"best": 0.47928488226131866, "iteration": 1, "objective": 0.42591835929257305, "seq": 65, "trial_id": 10}, {"best": 0.47928488226131866, "iteration": 1, "objective": 0.34432928741828894, "seq": 66, "trial_id": 11}, {"best": 0.47928488226131866, "iteration": 2, "objective": 0.47928488226131866, "seq": 73, "trial_id": 12}, {"best": 0.47928488226131866, "iteration": 3, "objective": 0.36645072865254913, "seq": 95, "trial_id": 13}, {"best": 0.47928488226131866, "iteration": 3, "objective": 0.19996766613022585, "seq": 96, "trial_id": 14}, {"best": 0.47928488226131866, "iteration": 3, "objective": 0.43733518231444657, "seq": 97, "trial_id": 15}, {"best": 0.47928488226131866, "iteration": 3, "objective": 0.034913495902178515, "seq": 98, "trial_id": 16}, {"best": 0.47928488226131866, "iteration": 3, "objective": 0.26313342976676535, "seq": 99, "trial_id": 17}, {"best": 0.47928488226131866, "iteration": 4, "objective": 0.43733518231444657, "seq": 108, "trial_id": 18}, {"best": 0.4892300018334832, "iteration": 5, "objective": 0.4892300018334832, "seq": 122, "trial_id": 19}, {"best": 0.4892300018334832, "iteration": 5, "objective": 0.3789369199575975, "seq": 123, "trial_id": 20}, {"best": 0.4892300018334832, "iteration": 5, "objective": 0.39894605808334177, "seq": 124, "trial_id": 21}], "process": {"config": {"algorithm": {"R": 9, "eta": 3, "name": "hyperband"}, "budget": 33, "fixed": {}, "objective": {"direction": "maximize", "metric": "objective"}, "parallelism": 2, "per_trial_budget": 1, "schema_version": 1, "seed": 22, "space": {"params": [{"high": 0.1, "kind": "continuous", "low": 1e-05, "name": "lr", "scale": "log"}, {"high": 1.0, "kind": "continuous", "low": 0.0, "name": "momentum", "scale": "linear"}, {"choices": ["relu", "tanh", "sigmoid"], "kind": "categorical", "name": "activation"}]}, "worker": {"builtin": "noisy_additive", "timeout": 300.0}}, "process_id": "s0001-p001", "status": "finished", "study_id": "s0001"}, "study": {"created_at": 1786186110.988515, "name": "hyperband-fixture", "process_ids": ["s0001-p001"], "study_id": "s0001", "v": 1}, "summary": {"name": "hyperband-fixture", "processes": [{"algorithm": "hyperband", "best_objective": 0.4892300018334832, "counts": {"discarded": 17, "ok": 5}, "direction": "maximize", "histograms": {"inference_ms": {"counts": [2, 1, 0, 1, 5, 0, 2, 2, 2, 7], "edges": [15.668, 16.5163, 17.3646, 18.212899999999998, 19.0612, 19.9095, 20.7578, 21.606099999999998, 22.4544, 23.3027, 24.151]}, "model_size": {"counts": [2, 1, 0, 1, 5, 0, 2, 2, 2, 7], "edges": [1066.792, 1151.6272, 1236.4624, 1321.2975999999999, 1406.1327999999999, 1490.9679999999998, 1575.8032, 1660.6384, 1745.4736, 1830.3088, 1915.144]}, "objective": {"counts": [1, 2, 1, 2, 0, 2, 3, 2, 5, 4], "edges": [0.034913495902178515, 0.08034514649530898, 0.12577679708843945, 0.1712084476815699, 0.21664009827470038, 0.26207174886783086, 0.3075033994609613, 0.35293505005409176, 0.39836670064722224, 0.4437983512403527, 0.4892300018334832]}}, "objective_mean": 0.3247175965528821, "objective_metric": "objective", "objective_std": 0.13691956298087446, "process_id": "s0001-p001", "status": "finished", "total_trials": 22}], "schema_version": 1, "study_id": "s0001"}, "tradeoff": {"points": [{"on_front": true, "process_id": "s0001-p001", "trial_id": 0, "x": 1199.587, "y": 0.13971310127722014}, {"on_front": true, "process_id": "s0001-p001", "trial_id": 1, "x": 1463.437, "y": 0.34432928741828894}, {"on_front": false, "process_id": "s0001-p001", "trial_id": 2, "x": 1862.446, "y": 0.42591835929257305}, {"on_front": false, "process_id": "s0001-p001", "trial_id": 3, "x": 1609.129, "y": 0.328177625849232}, {"on_front": false, "process_id": "s0001-p001", "trial_id": 4, "x": 1330.375, "y": 0.10765609166095771}, {"on_front": true, "process_id": "s0001-p001", "trial_id": 5, "x": 1436.318, "y": 0.2863980878217973}, {"on_front": false, "process_id": "s0001-p001", "trial_id": 6, "x": 1915.144, "y": 0.47928488226131866}, {"on_front": true, "process_id": "s0001-p001", "trial_id": 7, "x": 1066.792, "y": 0.08265615076514377}, {"on_front": true, "process_id": "s0001-p001", "trial_id": 8, "x": 1417.489, "y": 0.21458746162834222}, {"on_front": false, "process_id": "s0001-p001", "trial_id": 9, "x": 1915.144, "y": 0.47928488226131866}, {"on_front": false, "process_id": "s0001-p001", "trial_id": 10, "x": 1862.446, "y": 0.42591835929257305}, {"on_front": true, "process_id": "s0001-p001", "trial_id": 11, "x": 1463.437, "y": 0.34432928741828894}, {"on_front": false, "process_id": "s0001-p001", "trial_id": 12, "x": 1915.144, "y": 0.47928488226131866}, {"on_front": false, "process_id": "s0001-p001", "trial_id": 13, "x": 1798.687, "y": 0.36645072865254913}, {"on_front": true, "process_id": "s0001-p001", "trial_id": 14, "x": 1414.804, "y": 0.19996766613022585}, {"on_front": false, "process_id": "s0001-p001", "trial_id": 15, "x": 1864.975, "y": 0.43733518231444657}, {"on_front": false, "process_id": "s0001-p001", "trial_id": 16, "x": 1087.584, "y": 0.034913495902178515}, {"on_front": false, "process_id": "s0001-p001", "trial_id": 17, "x": 1660.453, "y": 0.26313342976676535}, {"on_front": false, "process_id": "s0001-p001", "trial_id": 18, "x": 1864.975, "y": 0.43733518231444657}, {"on_front": true, "process_id": "s0001-p001", "trial_id": 19, "x": 1773.733, "y": 0.4892300018334832}, {"on_front": false, "process_id": "s0001-p001", "trial_id": 20, "x": 1710.504, "y": 0.3789369199575975}, {"on_front": true, "process_id": "s0001-p001", "trial_id": 21, "x": 1685.322, "y": 0.39894605808334177}], "schema_version": 1, "skipped": 0, "x": "model_size", "y": "objective"}, "trials": [{"assignment": {"activation": "relu", "lr": 0.0002920032342329088, "momentum": 0.1992953793750829}, "aux": {"inference_ms": 16.996, "model_size": 1199.587}, "budget": 1, "budget_consumed": 1, "checkpoint_source": null, "created_at": 1786186110.989547, "finished_at": 1786186110.9914842, "iteration": 0, "objective": 0.13971310127722014, "origin": "sampled", "parent": null, "process_id": "s0001-p001", "started_at": 1786186110.9897094, "status": "discarded", "trial_id": 0, "v": 1}, {"assignment": {"activation": "sigmoid", "lr": 0.004099838509312262, "momentum": 0.45933704474394677}, "aux": {"inference_ms": 19.634, "model_size": 1463.437}, "budget": 1, "budget_consumed": 1, "checkpoint_source": null, "created_at": 1786186110.990006, "finished_at": 1786186110.992228, "iteration": 0, "objective": 0.34432928741828894, "origin": "sampled", "parent": null, "process_id": "s0001-p001", "started_at": 1786186110.9902227, "status": "ok", "trial_id": 1, "v": 1}, {"assignment": {"activation": "relu", "lr": 0.025484274795284617, "momentum": 0.8369613232370445}, "aux": {"inference_ms": 23.624, "model_size": 1862.446}, "budget": 1, "budget_consumed": 1, "checkpoint_source": null, "created_at": 1786186110.9929504, "finished_at": 1786186110.9949338, "iteration": 0, "objective": 0.42591835929257305, "origin": "sampled", "parent": null, "process_id": "s0001-p001", "started_at": 1786186110.9931402, "status": "ok", "trial_id": 2, "v": 1}, {"assignment": {"activation": "relu", "lr": 0.0016648711263076027, "momentum": 0.6074645263526672}, "aux": {"inference_ms": 21.091, "model_size": 1609.129}, "budget": 1, "budget_consumed": 1, "checkpoint_source": null, "created_at": 1786186110.9932866, "finished_at": 1786186110.9942765, "iteration": 0, "objective": 0.328177625849232, "origin": "sampled", "parent": null, "process_id": "s0001-p001", "started_at": 1786186110.993436, "status": "discarded", "trial_id": 3, "v": 1}, {"assignment": {"activation": "relu", "lr": 0.0008115435134164091, "momentum": 0.3295638093050687}, "aux": {"inference_ms": 18.304, "model_size": 1330.375}, "budget": 1, "budget_consumed": 1, "checkpoint_source": null, "created_at": 1786186110.995536, "finished_at": 1786186110.997674, "iteration": 0, "objective": 0.10765609166095771, "origin": "sampled", "parent": null, "process_id": "s0001-p001", "started_at": 1786186110.9957023, "status": "discarded", "trial_id": 4, "v": 1}, {"assignment": {"activation": "relu", "lr": 0.015419380691908176, "momentum": 0.4208988897395992}, "aux": {"inference_ms": 19.363, "model_size": 1436.318}, "budget": 1, "budget_consumed": 1, "checkpoint_source": null, "created_at": 1786186110.9962258, "finished_at": 1786186110.9970207, "iteration": 0, "objective": 0.2863980878217973, "origin": "sampled", "parent": null, "process_id": "s0001-p001", "started_at": 1786186110.9964337, "status": "discarded", "trial_id": 5, "v": 1}, {"assignment": {"activation": "tanh", "lr": 0.00029942115010908143, "momentum": 0.9148444266975111}, "aux": {"inference_ms": 24.151, "model_size": 1915.144}, "budget": 1, "budget_consumed": 1, "checkpoint_source": null, "created_at": 1786186110.9983237, "finished_at": 1786186110.9999335, "iteration": 0, "objective": 0.47928488226131866, "origin": "sampled", "parent": null, "process_id": "s0001-p001", "started_at": 1786186110.9985077, "status": "ok", "trial_id": 6, "v": 1}, {"assignment": {"activation": "tanh", "lr": 5.6149182252863545e-05, "momentum": 0.06673615504684005}, "aux": {"inference_ms": 15.668, "model_size": 1066.792}, "budget": 1, "budget_consumed": 1, "checkpoint_source": null, "created_at": 1786186110.9986653, "finished_at": 1786186111.0008118, "iteration": 0, "objective": 0.08265615076514377, "origin": "sampled", "parent": null, "process_id": "s0001-p001", "started_at": 1786186110.9988456, "status": "discarded", "trial_id": 7, "v": 1}, {"assignment": {"activation": "sigmoid", "lr": 0.004679763864660564, "momentum": 0.4128095842692784}, "aux": {"inference_ms": 19.175, "model_size": 1417.489}, "budget": 1, "budget_consumed": 1, "checkpoint_source": null, "created_at": 1786186111.0014856, "finished_at": 1786186111.002287, "iteration": 0, "objective": 0.21458746162834222, "origin": "sampled", "parent": null, "process_id": "s0001-p001", "started_at": 1786186111.0017173, "status": "discarded", "trial_id": 8, "v": 1}, {"assignment": {"activation": "tanh", "lr": 0.00029942115010908143, "momentum": 0.9148444266975111}, "aux": {"inference_ms": 24.151, "model_size": 1915.144}, "budget": 2, "budget_consumed": 2, "checkpoint_source": 6, "created_at": 1786186111.005052, "finished_at": 1786186111.0076582, "iteration": 1, "objective": 0.47928488226131866, "origin": "promoted", "parent": 6, "process_id": "s0001-p001", "started_at": 1786186111.0051131, "status": "ok", "trial_id": 9, "v": 1}, {"assignment": {"activation": "relu", "lr": 0.025484274795284617, "momentum": 0.8369613232370445}, "aux": {"inference_ms": 23.624, "model_size": 1862.446}, "budget": 2, "budget_consumed": 2, "checkpoint_source": 2, "created_at": 1786186111.0052958, "finished_at": 1786186111.006051, "iteration": 1, "objective": 0.42591835929257305, "origin": "promoted", "parent": 2, "process_id": "s0001-p001", "started_at": 1786186111.005352, "status": "discarded", "trial_id": 10, "v": 1}, {"assignment": {"activation": "sigmoid", "lr": 0.004099838509312262, "momentum": 0.45933704474394677}, "aux": {"inference_ms": 19.634, "model_size": 1463.437}, "budget": 2, "budget_consumed": 2, "checkpoint_source": 1, "created_at": 1786186111.007429, "finished_at": 1786186111.0091445, "iteration": 1, "objective": 0.34432928741828894, "origin": "promoted", "parent": 1, "process_id": "s0001-p001", "started_at": 1786186111.0075035, "status": "discarded", "trial_id": 11, "v": 1}, {"assignment": {"activation": "tanh", "lr": 0.00029942115010908143, "momentum": 0.9148444266975111}, "aux": {"inference_ms": 24.151, "model_size": 1915.144}, "budget": 6, "budget_consumed": 6, "checkpoint_source": 9, "created_at": 1786186111.0107455, "finished_at": 1786186111.0116324, "iteration": 2, "objective": 0.47928488226131866, "origin": "promoted", "parent": 9, "process_id": "s0001-p001", "started_at": 1786186111.0108461, "status": "discarded", "trial_id": 12, "v": 1}, {"assignment": {"activation": "tanh", "lr": 0.0012530149497058127, "momentum": 0.7974343080247323}, "aux": {"inference_ms": 22.987, "model_size": 1798.687}, "budget": 3, "budget_consumed": 3, "checkpoint_source": null, "created_at": 1786186111.012911, "finished_at": 1786186111.0140557, "iteration": 3, "objective": 0.36645072865254913, "origin": "sampled", "parent": null, "process_id": "s0001-p001", "started_at": 1786186111.0131195, "status": "discarded", "trial_id": 13, "v": 1}, {"assignment": {"activation": "relu", "lr": 0.002307786397351249, "momentum": 0.41249657654728344}, "aux": {"inference_ms": 19.148, "model_size": 1414.804}, "budget": 3, "budget_consumed": 3, "checkpoint_source": null, "created_at": 1786186111.0137403, "finished_at": 1786186111.0159948, "iteration": 3, "objective": 0.19996766613022585, "origin": "sampled", "parent": null, "process_id": "s0001-p001", "started_at": 1786186111.0139368, "status": "discarded", "trial_id": 14, "v": 1}, {"assignment": {"activation": "sigmoid", "lr": 0.006582049595075165, "momentum": 0.8583934274602852}, "aux": {"inference_ms": 23.65, "model_size": 1864.975}, "budget": 3, "budget_consumed": 3, "checkpoint_source": null, "created_at": 1786186111.0155993, "finished_at": 1786186111.0177202, "iteration": 3, "objective": 0.43733518231444657, "origin": "sampled", "parent": null, "process_id": "s0001-p001", "started_at": 1786186111.015865, "status": "ok", "trial_id": 15, "v": 1}, {"assignment": {"activation": "relu", "lr": 0.00047672058185872166, "momentum": 0.08710748429584014}, "aux": {"inference_ms": 15.876, "model_size": 1087.584}, "budget": 3, "budget_consumed": 3, "checkpoint_source": null, "created_at": 1786186111.0173855, "finished_at": 1786186111.0194597, "iteration": 3, "objective": 0.034913495902178515, "origin": "sampled", "parent": null, "process_id": "s0001-p001", "started_at": 1786186111.0175776, "status": "discarded", "trial_id": 16, "v": 1}, {"assignment": {"activation": "relu", "lr": 0.001603461141517371, "momentum": 0.6588492958364527}, "aux": {"inference_ms": 21.605, "model_size": 1660.453}, "budget": 3, "budget_consumed": 3, "checkpoint_source": null, "created_at": 1786186111.019147, "finished_at": 1786186111.0209746, "iteration": 3, "objective": 0.26313342976676535, "origin": "sampled", "parent": null, "process_id": "s0001-p001", "started_at": 1786186111.0193436, "status": "discarded", "trial_id": 17, "v": 1}, {"assignment": {"activation": "sigmoid", "lr": 0.006582049595075165, "momentum": 0.8583934274602852}, "aux": {"inference_ms": 23.65, "model_size": 1864.975}, "budget": 6, "budget_consumed": 6, "checkpoint_source": 15, "created_at": 1786186111.0229297, "finished_at": 1786186111.0239952, "iteration": 4, "objective": 0.43733518231444657, "origin": "promoted", "parent": 15, "process_id": "s0001-p001", "started_at": 1786186111.023018, "status": "discarded", "trial_id": 18, "v": 1}, {"assignment": {"activation": "sigmoid", "lr": 0.05911261424969761, "momentum": 0.7146202136179531}, "aux": {"inference_ms": 22.737, "model_size": 1773.733}, "budget": 9, "budget_consumed": 9, "checkpoint_source": null, "created_at": 1786186111.0254157, "finished_at": 1786186111.0274255, "iteration": 5, "objective": 0.4892300018334832, "origin": "sampled", "parent": null, "process_id": "s0001-p001", "started_at": 1786186111.0256367, "status": "discarded", "trial_id": 19, "v": 1}, {"assignment": {"activation": "tanh", "lr": 0.0896800117102206, "momentum": 0.6208241009193699}, "aux": {"inference_ms": 22.105, "model_size": 1710.504}, "budget": 9, "budget_consumed": 9, "checkpoint_source": null, "created_at": 1786186111.025765, "finished_at": 1786186111.0285606, "iteration": 5, "objective": 0.3789369199575975, "origin": "sampled", "parent": null, "process_id": "s0001-p001", "started_at": 1786186111.0259624, "status": "discarded", "trial_id": 20, "v": 1}, {"assignment": {"activation": "sigmoid", "lr": 7.899758658491659e-05, "momentum": 0.6852431498370474}, "aux": {"inference_ms": 21.853, "model_size": 1685.322}, "budget": 9, "budget_consumed": 9, "checkpoint_source": null, "created_at": 1786186111.0297196, "finished_at": 1786186111.030932, "iteration": 5, "objective": 0.39894605808334177, "origin": "sampled", "parent": null, "process_id": "s0001-p001", "started_at": 1786186111.0299542, "status": "discarded", "trial_id": 21, "v": 1}]} as const;
