#!/usr/bin/env python3
"""Regenerate the bundled fixture set (dictionary, corpus, weights).

The corpus is engineered: several concept clusters carry exact co-occurrence
counts that the test suite asserts (neighbor thresholds and colors, decade
histograms, specific posting sets). Every document declares the concept set
it is expected to yield; the generator rebuilds the index and verifies all
engineered invariants before writing anything, so a wording slip that matches
an unintended surface form fails loudly here instead of inside the tests.

Run from the repository root: python3 tools/make_fixtures.py
"""

import json
import sys
import tempfile
from pathlib import Path

from coocnet.cooc import WeightConfig, build_index
from coocnet.extract import extract_document, parse_document_line
from coocnet.ontology import load_dictionary
from coocnet.query import edge_publications, neighbors
from coocnet.store import IndexBundle, save_index
from coocnet.treeviz import build_hierarchy, leaf_count

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

# (id, preferred_term, synonyms, tree_numbers, semantic_types)
CONCEPTS = [
    # Category owners. Their names label the grouping nodes of result trees.
    ("D002318", "Cardiovascular Diseases", [], ["C14"], ["T047"]),
    ("D006331", "Heart Diseases", [], ["C14.280"], ["T047"]),
    ("D002313", "Cardiomyopathies", [], ["C14.280.238"], ["T047"]),
    ("D014652", "Vascular Diseases", [], ["C14.907"], ["T047"]),
    ("D009422", "Nervous System Diseases", [], ["C10"], ["T047"]),
    ("D002493", "Central Nervous System Diseases", [], ["C10.228"], ["T047"]),
    ("D001927", "Brain Diseases", [], ["C10.228.140"], ["T047"]),
    ("D020274", "Autoimmune Diseases of the Nervous System", [], ["C10.114"], ["T047"]),
    ("D002561", "Cerebrovascular Disorders", [], ["C10.228.140.300"], ["T047"]),
    ("D005128", "Eye Diseases", [], ["C11"], ["T047"]),
    ("D012164", "Retinal Diseases", [], ["C11.768"], ["T047"]),
    ("D009750", "Nutritional and Metabolic Diseases", [], ["C18"], ["T047"]),
    ("D044342", "Malnutrition", [], ["C18.654.521"], ["T047"]),
    ("D012140", "Respiratory Tract Diseases", [], ["C08"], ["T047"]),
    ("D008173", "Lung Diseases", [], ["C08.381"], ["T047"]),
    ("D014780", "Virus Diseases", [], ["C02"], ["T047"]),
    # Cardiovascular.
    ("D054549", "Takotsubo Cardiomyopathy",
     ["Takotsubo Syndrome", "Stress Cardiomyopathy", "Broken Heart Syndrome",
      "Apical Ballooning Syndrome"],
     ["C14.280.238.845"], ["T047"]),
    ("D006333", "Heart Failure", ["Cardiac Failure"], ["C14.280.434"], ["T047"]),
    ("D009203", "Myocardial Infarction", ["Heart Attack"], ["C14.280.647.500"], ["T047"]),
    ("D001145", "Arrhythmias, Cardiac", ["Cardiac Arrhythmias", "Arrhythmia"],
     ["C14.280.067"], ["T047"]),
    ("D006973", "Hypertension", ["High Blood Pressure"], ["C14.907.489"], ["T047"]),
    ("D003324", "Coronary Artery Disease", ["Coronary Arteriosclerosis"],
     ["C14.280.647.250"], ["T047"]),
    ("D020521", "Stroke", ["Cerebrovascular Accident"],
     ["C10.228.140.300.775", "C14.907.253.855"], ["T047"]),
    # Nervous system.
    ("D004827", "Epilepsy", ["Seizure Disorder"], ["C10.228.140.490"], ["T047"]),
    ("D008881", "Migraine Disorders", ["Migraine"], ["C10.228.140.546"], ["T047"]),
    ("D009103", "Multiple Sclerosis", ["Disseminated Sclerosis", "MS"],
     ["C10.114.375.500"], ["T047"]),
    ("C537954", "Marburg variant multiple sclerosis", [], [], ["T047"]),
    ("D003704", "Dementia", [], ["C10.228.140.380"], ["T047"]),
    ("D000544", "Alzheimer Disease", ["Alzheimer's Disease", "Alzheimer Dementia"],
     ["C10.228.140.380.100"], ["T047"]),
    ("C536599", "Familial Alzheimer disease", [], [], ["T047"]),
    ("D010300", "Parkinson Disease", ["Parkinson's Disease", "Paralysis Agitans"],
     ["C10.228.140.079.862"], ["T047"]),
    # Eye.
    ("D005901", "Glaucoma", [], ["C11.525.381"], ["T047"]),
    ("D009798", "Ocular Hypertension", [], ["C11.525.393"], ["T047"]),
    ("D014605", "Uveitis", [], ["C11.941.879"], ["T047"]),
    ("D003930", "Diabetic Retinopathy", [], ["C11.768.257"], ["T047"]),
    ("D002386", "Cataract", [], ["C11.510.245"], ["T047"]),
    ("D008268", "Macular Degeneration", ["Age-Related Macular Degeneration"],
     ["C11.768.585"], ["T047"]),
    ("D012163", "Retinal Detachment", [], ["C11.768.760"], ["T047"]),
    # Nutritional and metabolic.
    ("D014806", "Vitamin D Deficiency", ["Hypovitaminosis D"],
     ["C18.654.521.500"], ["T047"]),
    ("D012279", "Rickets", ["Rachitis"], ["C18.654.521.500.770"], ["T047"]),
    ("D001361", "Avitaminosis", [], ["C18.654.278"], ["T047"]),
    ("D009765", "Obesity", [], ["C18.654.726.500"], ["T047"]),
    ("D003920", "Diabetes Mellitus", [], ["C18.452.394.750"], ["T047"]),
    ("D006943", "Hyperglycemia", [], ["C18.452.394"], ["T047"]),
    # Respiratory, infections, mental, musculoskeletal.
    ("D001249", "Asthma", [], ["C08.127.108"], ["T047"]),
    ("D008453", "Measles", ["Rubeola"], ["C02.782.580.600"], ["T047"]),
    ("D008457", "Measles virus", ["Rubeola virus"], ["B04.820.455"], ["T005"]),
    ("D011618", "Psychotic Disorders", ["Psychosis", "Psychoses"], ["F03.700"], ["T048"]),
    ("D012559", "Schizophrenia", [], ["F03.700.750"], ["T048"]),
    ("D003693", "Delirium", [], ["C10.597.606.337"], ["T048"]),
    ("D006816", "Huntington Disease", ["Huntington's Chorea"],
     ["C10.228.140.079.545"], ["T047"]),
    ("D010003", "Osteoarthritis", [], ["C05.550.114.606"], ["T047"]),
    ("D001172", "Arthritis, Rheumatoid", ["Rheumatoid Arthritis"],
     ["C05.550.114.154"], ["T047"]),
    # Substances and plants.
    ("D014807", "Vitamin D", [], ["D11.786.708"], ["T121", "T127"]),
    ("D002117", "Calcitriol", [], ["D11.786.708.300"], ["T121"]),
    ("D002762", "Cholecalciferol", ["Vitamin D3"], ["D11.786.708.250"], ["T121"]),
    ("D001241", "Aspirin", ["Acetylsalicylic Acid"], ["D02.241.223.100"], ["T121"]),
    ("D006493", "Heparin", [], ["D09.698.373.400"], ["T121"]),
    ("D002188", "Cannabis", ["Marijuana"], ["B11.649.155"], ["T002"]),
    # Diagnostic procedures.
    ("D041623", "Tomography, Optical Coherence", ["Optical Coherence Tomography"],
     ["E01.370.350.515.880"], ["T060"]),
    ("D004562", "Electrocardiography", ["Electrocardiogram", "ECG"],
     ["E01.370.370.380"], ["T060"]),
]

TAK = "D054549"
HF = "D006333"
MI = "D009203"
ARR = "D001145"
HYP = "D006973"
EPI = "D004827"
MIG = "D008881"
MS = "D009103"
MARB = "C537954"
GLAU = "D005901"
OCHYP = "D009798"
UVE = "D014605"
DR = "D003930"
CAT = "D002386"
MD = "D008268"
RD = "D012163"
MV = "D008457"
MEAS = "D008453"
VITD = "D014807"
CALC = "D002117"
D3 = "D002762"
VDD = "D014806"
RICK = "D012279"
ALZ = "D000544"
FAMALZ = "C536599"
DEM = "D003704"
PARK = "D010300"
OCT = "D041623"
ECG = "D004562"
CANN = "D002188"
PSY = "D011618"
SCHIZ = "D012559"
ASP = "D001241"
HEP = "D006493"
STROKE = "D020521"
CAD = "D003324"
DIAB = "D003920"
OBES = "D009765"
HYGLY = "D006943"
ASTH = "D001249"
DEMV = DEM

# (doc_id, date, title, abstract, full_text, subject_concept, expected concept ids)
# subject_concept set => encyclopedia record; otherwise research.
DOCS = [
    # Takotsubo cluster. Exact neighbor counts: HF 3r, MI 2r, ARR 1r, HYP 2r,
    # EPI 3r, MIG 2r, MS 2r; the encyclopedia page adds a qualifying posting
    # for HF, MI and ARR. No other document may mention Takotsubo.
    ("pmid-850001", "2004", "Takotsubo cardiomyopathy presenting as acute heart failure",
     None, None, None, {TAK, HF}),
    ("pmid-850002", "2009-05", "Reversible heart failure in takotsubo syndrome",
     "We describe a cohort in whom takotsubo syndrome produced transient heart failure "
     "with full recovery.", None, None, {TAK, HF}),
    ("pmid-850003", "2014-02-10", "Outcomes of heart failure complicating stress cardiomyopathy",
     None,
     "In this registry heart failure complicated stress cardiomyopathy in one of four "
     "admissions. Takotsubo cardiomyopathy carried a favourable prognosis overall.",
     None, {TAK, HF}),
    ("pmid-850004", "2006-11", "Takotsubo cardiomyopathy mimicking acute myocardial infarction",
     "Apical ballooning syndrome is frequently mistaken for myocardial infarction on "
     "admission.", None, None, {TAK, MI}),
    ("pmid-850005", "2012-04-03",
     "Differentiating takotsubo cardiomyopathy from myocardial infarction by angiography",
     None, None, None, {TAK, MI}),
    ("pmid-850006", "2010-08-15",
     "Cardiac arrhythmias during the acute phase of takotsubo cardiomyopathy",
     None, None, None, {TAK, ARR}),
    ("pmid-850007", "2013-06",
     "Hypertension as a susceptibility factor for takotsubo cardiomyopathy",
     None, None, None, {TAK, HYP}),
    ("pmid-850008", "2018-09-01",
     "Blood pressure trajectories and hypertension after takotsubo syndrome",
     None, None, None, {TAK, HYP}),
    ("pmid-850009", "2008-03-12",
     "Takotsubo cardiomyopathy triggered by epilepsy: a case series",
     None, None, None, {TAK, EPI}),
    ("pmid-850010", "2011-07-01", "Ictal takotsubo syndrome in adults with chronic epilepsy",
     "Seizures were followed by apical ballooning in eleven patients with epilepsy; "
     "takotsubo syndrome resolved within two weeks.", None, None, {TAK, EPI}),
    ("pmid-850011", "2015-10-20",
     "Recurrent takotsubo cardiomyopathy associated with refractory epilepsy",
     None, None, None, {TAK, EPI}),
    ("pmid-850012", "2016", "Migraine and takotsubo cardiomyopathy: shared vascular reactivity?",
     None, None, None, {TAK, MIG}),
    ("pmid-850013", "2019-02",
     "Prevalence of migraine in patients hospitalised for takotsubo syndrome",
     None, None, None, {TAK, MIG}),
    ("pmid-850014", "2017-05", "Takotsubo cardiomyopathy in women with multiple sclerosis",
     None, None, None, {TAK, MS}),
    ("pmid-850015", "2021-11-30",
     "Autonomic storm and takotsubo cardiomyopathy during multiple sclerosis relapse",
     None, None, None, {TAK, MS}),
    ("med-takotsubo", "2020", "Takotsubo cardiomyopathy (broken heart syndrome)",
     None,
     "Takotsubo cardiomyopathy, also called broken heart syndrome, is a sudden weakening "
     "of the heart muscle. Symptoms resemble myocardial infarction. Complications include "
     "heart failure and cardiac arrhythmias. Most people recover within weeks.",
     TAK, {TAK, MI, HF, ARR}),
    # Glaucoma cluster: the display-threshold table. Per partner
    # (research_count, qualifying encyclopedia): OCHYP (0,F), UVE (1,F),
    # DR (2,F), CAT (0,T), MD (1,T), RD (2,T). No other document mentions
    # glaucoma.
    ("pmid-330001", "1995-04", "Secondary glaucoma in chronic uveitis",
     None, None, None, {GLAU, UVE}),
    ("pmid-330002", "2001", "Glaucoma risk in eyes with diabetic retinopathy",
     None, None, None, {GLAU, DR}),
    ("pmid-330003", "2007-09-12", "Screening for glaucoma in a diabetic retinopathy clinic",
     None, None, None, {GLAU, DR}),
    ("pmid-330004", "1999-03", "Retinal detachment after filtration surgery for glaucoma",
     None, None, None, {GLAU, RD}),
    ("pmid-330005", "2011-06", "Incidence of retinal detachment in eyes treated for glaucoma",
     None, None, None, {GLAU, RD}),
    ("pmid-330006", "2009-08",
     "Visual field loss from glaucoma coexisting with macular degeneration",
     None, None, None, {GLAU, MD}),
    ("med-cataract", "2018", "Cataract",
     None,
     "A cataract is a clouding of the lens. Risk rises with age. People with ocular "
     "hypertension or glaucoma need regular eye examinations.",
     CAT, {CAT, OCHYP, GLAU}),
    ("med-macular-degeneration", "2019", "Macular degeneration",
     None,
     "Age-related macular degeneration blurs central vision. It is distinct from "
     "glaucoma, which damages the optic nerve.",
     MD, {MD, GLAU}),
    ("med-glaucoma", "2021", "Glaucoma",
     None,
     "Glaucoma damages the optic nerve, often without early symptoms. Sudden flashes "
     "may instead signal retinal detachment, a separate emergency.",
     GLAU, {GLAU, RD}),
    # Measles virus and multiple sclerosis: exact dates for the decade
    # histogram {1970: 3, 1980: 2, 2000: 1}. No other document may pair them.
    ("pmid-190001", "1971-03-15", "Measles virus antibodies in patients with multiple sclerosis",
     None, None, None, {MV, MS}),
    ("pmid-190002", "1974-10-02", "Elevated measles virus titres in multiple sclerosis",
     None, None, None, {MV, MS}),
    ("pmid-190003", "1978-06-21",
     "Search for measles virus genome in multiple sclerosis brain tissue",
     None, None, None, {MV, MS}),
    ("pmid-190004", "1982-01-30",
     "Intrathecal synthesis of measles virus antibody in multiple sclerosis",
     None, None, None, {MV, MS}),
    ("pmid-190005", "1986-09-09",
     "Failure to isolate measles virus from multiple sclerosis lesions",
     None, None, None, {MV, MS}),
    ("pmid-190006", "2003-05-14",
     "Revisiting the measles virus hypothesis in multiple sclerosis aetiology",
     None, None, None, {MV, MS}),
    # Multiple sclerosis extras, including a tree-number-less supplementary
    # concept that lands in the synthetic unclassified branch.
    ("pmid-460001", "1999",
     "Marburg variant multiple sclerosis: distinction from classical multiple sclerosis",
     None, None, None, {MARB, MS}),
    ("pmid-460002", "2008",
     "Fulminant course of Marburg variant multiple sclerosis compared with relapsing "
     "multiple sclerosis",
     None, None, None, {MARB, MS}),
    ("pmid-460003", "2018-06",
     "Seizure incidence in multiple sclerosis: epilepsy as a presenting feature",
     None, None, None, {MS, EPI}),
    # Rickets cluster: pharmacological-filter demo.
    ("pmid-260001", "1965-02", "Vitamin D in the prevention of infantile rickets",
     None, None, None, {VITD, RICK}),
    ("pmid-260002", "1972", "Dietary vitamin D and radiographic healing of rickets",
     None, None, None, {VITD, RICK}),
    ("pmid-260003", "2010-03-04",
     "Vitamin D supplementation for nutritional rickets: a randomised trial",
     None,
     "Children receiving vitamin D showed radiographic healing of rickets at twelve "
     "weeks. Rickets recurred in the placebo group.",
     None, {VITD, RICK}),
    ("pmid-260004", "1984-07", "Calcitriol therapy in hereditary rickets",
     None, None, None, {CALC, RICK}),
    ("pmid-260005", "1992-11-11", "Response of hypophosphataemic rickets to calcitriol",
     None, None, None, {CALC, RICK}),
    ("pmid-260006", "2015", "Nutritional rickets in children with vitamin D deficiency",
     None, None, None, {RICK, VDD}),
    ("pmid-260007", "2020-06-01",
     "Resurgence of rickets: the role of vitamin D deficiency in urban infants",
     "Hypovitaminosis D remains the leading cause of nutritional rickets worldwide.",
     None, None, {RICK, VDD}),
    ("med-rickets", "2017", "Rickets",
     None,
     "Rickets softens bones in children. The usual cause is too little vitamin D from "
     "diet or sunlight.",
     RICK, {RICK, VITD}),
    # Alzheimer cluster.
    ("pmid-440001", "2018-01",
     "Retinal thinning on optical coherence tomography in Alzheimer disease",
     None, None, None, {OCT, ALZ}),
    ("pmid-440002", "2019-07-07",
     "Optical coherence tomography as a screening tool for Alzheimer disease",
     None, None, None, {OCT, ALZ}),
    ("pmid-440003", "2014-03",
     "Shared drusen pathology in macular degeneration and Alzheimer disease",
     None, None, None, {MD, ALZ}),
    ("pmid-440004", "2016-10",
     "Macular degeneration and incident Alzheimer disease in a population cohort",
     None, None, None, {MD, ALZ}),
    ("pmid-440005", "2013-05",
     "Familial Alzheimer disease compared with sporadic Alzheimer disease: age at onset",
     None, None, None, {FAMALZ, ALZ}),
    ("pmid-440006", "2022-08",
     "Biomarker trajectories in familial Alzheimer disease and sporadic Alzheimer disease",
     None, None, None, {FAMALZ, ALZ}),
    ("med-alzheimer", "2022", "Alzheimer disease",
     None,
     "Alzheimer disease is the most common cause of dementia in older adults. Memory "
     "loss worsens gradually.",
     ALZ, {ALZ, DEM}),
    # Cannabis and psychosis.
    ("pmid-550001", "1987-12", "Cannabis use preceding acute psychosis: a retrospective series",
     None, None, None, {CANN, PSY}),
    ("pmid-550002", "2005-04-18", "Adolescent cannabis exposure and later psychotic disorders",
     None, None, None, {CANN, PSY}),
    ("pmid-550003", "2016-08",
     "Dose-response association between cannabis potency and psychotic disorders",
     None, None, None, {CANN, PSY}),
    ("pmid-550004", "2002", "Cannabis use in early schizophrenia",
     None, None, None, {CANN, SCHIZ}),
    ("pmid-550005", "2011-09", "Self-medication with cannabis among outpatients with schizophrenia",
     None, None, None, {CANN, SCHIZ}),
    # General filler pairs. None may mention takotsubo or glaucoma, and none
    # may pair measles virus with multiple sclerosis.
    ("pmid-700001", "1996", "Hypertension and first-ever stroke: a cohort study",
     None, None, None, {HYP, STROKE}),
    ("pmid-700002", "2003-02", "Ambulatory blood pressure, hypertension and recurrent stroke",
     None, None, None, {HYP, STROKE}),
    ("pmid-700003", "1993", "Coronary artery disease risk in treated hypertension",
     None, None, None, {CAD, HYP}),
    ("pmid-700004", "2008-12", "Progression of coronary artery disease in resistant hypertension",
     None, None, None, {CAD, HYP}),
    ("pmid-700005", "1989", "Heart failure after first myocardial infarction",
     None, None, None, {HF, MI}),
    ("pmid-700006", "2014-06",
     "Predicting heart failure following myocardial infarction with biomarkers",
     None, None, None, {HF, MI}),
    ("pmid-700007", "1998-05", "Comorbidity of epilepsy and migraine in tertiary care",
     None, None, None, {EPI, MIG}),
    ("pmid-700008", "2012-12-12", "Shared cortical excitability in migraine and epilepsy",
     None,
     "Cortical spreading depression links migraine with epilepsy in experimental models. "
     "Patients with epilepsy reported migraine attacks more often than controls.",
     None, {MIG, EPI}),
    ("pmid-700009", "2006", "Obesity and incident diabetes mellitus in middle age",
     None, None, None, {OBES, DIAB}),
    ("pmid-700010", "2015-05", "Weight loss, obesity and remission of diabetes mellitus",
     None, None, None, {OBES, DIAB}),
    ("pmid-700011", "2004-04", "Diabetic retinopathy prevalence by duration of diabetes mellitus",
     None, None, None, {DR, DIAB}),
    ("pmid-700012", "2013-07",
     "Tight glycaemic control and progression of diabetic retinopathy in diabetes mellitus",
     None, None, None, {DR, DIAB}),
    ("pmid-700013", "2010", "Obesity and asthma severity in adults",
     None, None, None, {OBES, ASTH}),
    ("pmid-700014", "1997", "Cognitive decline and dementia in Parkinson disease",
     None, None, None, {DEMV, PARK}),
    ("pmid-700015", "2009-01", "Incidence of dementia in late-stage Parkinson disease",
     None, None, None, {DEMV, PARK}),
    ("pmid-700016", "1990-10", "Fasting hyperglycemia as a predictor of diabetes mellitus",
     None, None, None, {HYGLY, DIAB}),
    ("pmid-700017", "2018-03",
     "Stress hyperglycemia in hospitalised patients with diabetes mellitus",
     None, None, None, {HYGLY, DIAB}),
    ("pmid-700018", "1988-02", "Aspirin in the secondary prevention of myocardial infarction",
     None, None, None, {ASP, MI}),
    ("pmid-700019", "2002-09", "Low-dose aspirin after myocardial infarction in the elderly",
     None, None, None, {ASP, MI}),
    ("pmid-700020", "1994", "Heparin in the early management of myocardial infarction",
     None, None, None, {HEP, MI}),
    ("pmid-700021", "1980-05", "Electrocardiography in the detection of cardiac arrhythmias",
     None, None, None, {ECG, ARR}),
    ("pmid-700022", "2000-11", "Ambulatory electrocardiography for intermittent cardiac arrhythmias",
     None, None, None, {ECG, ARR}),
    ("pmid-700023", "2012-05", "Cholecalciferol dosing in vitamin D deficiency",
     None, None, None, {D3, VDD}),
    ("pmid-700024", "1979-03", "Heart failure outcomes in longstanding hypertension",
     None, None, None, {HF, HYP}),
    ("pmid-700025", "2005-08", "Diastolic heart failure and hypertension in the elderly",
     None, None, None, {HF, HYP}),
    ("pmid-700026", "1983-11", "Cardiac arrhythmias complicating acute myocardial infarction",
     None, None, None, {ARR, MI}),
    ("pmid-700027", "2014-09", "Post-stroke epilepsy: incidence after ischaemic stroke",
     None, None, None, {EPI, STROKE}),
    ("pmid-700028", "2001-06", "Migraine prevalence in uncontrolled hypertension",
     None, None, None, {MIG, HYP}),
    ("pmid-700029", "1991", "Vascular dementia after multiple stroke events",
     None, None, None, {DEMV, STROKE}),
    ("pmid-700030", "2013-04", "Dementia risk following minor stroke: a registry study",
     None, None, None, {DEMV, STROKE}),
    ("pmid-700031", "2006-06", "Overlap syndromes of Parkinson disease and Alzheimer disease",
     None, None, None, {PARK, ALZ}),
    ("pmid-700032", "1998-10", "Cataract surgery outcomes in diabetes mellitus",
     None, None, None, {CAT, DIAB}),
    ("pmid-700033", "2017-02",
     "Accelerated cataract formation in younger adults with diabetes mellitus",
     None, None, None, {CAT, DIAB}),
    ("pmid-700034", "2003-12", "Complicated cataract in chronic uveitis",
     None, None, None, {CAT, UVE}),
    ("pmid-700035", "2012-02", "Optical coherence tomography staging of macular degeneration",
     None, None, None, {OCT, MD}),
    ("pmid-700036", "2021-07",
     "Home-based optical coherence tomography monitoring of macular degeneration",
     None, None, None, {OCT, MD}),
    ("pmid-700037", "1996-05", "Retinal detachment after extracapsular cataract extraction",
     None, None, None, {RD, CAT}),
    ("pmid-700038", "1986-04", "Obesity and the development of hypertension in young adults",
     None, None, None, {OBES, HYP}),
    ("pmid-700039", "2011-01", "Visceral obesity and resistant hypertension",
     None, None, None, {OBES, HYP}),
    ("pmid-700040", "2000-01", "Seizures during measles outbreaks: epilepsy sequelae in children",
     None, None, None, {MEAS, EPI}),
    ("pmid-700041", "2019-11", "Vitamin D deficiency in severe obesity",
     None, None, None, {VDD, OBES}),
    ("pmid-700042", "2016-03", "Vitamin D supplementation trials in obesity",
     None, None, None, {VITD, OBES}),
    ("pmid-700043", "2007-07", "Calcitriol for refractory hypovitaminosis D",
     None, None, None, {CALC, VDD}),
    ("pmid-700044", "1995-09", "Heparin prophylaxis and early stroke recurrence",
     None, None, None, {HEP, STROKE}),
    ("pmid-700045", "1990-03", "Aspirin for primary prevention of stroke",
     None, None, None, {ASP, STROKE}),
    ("pmid-700046", "2009-10", "Aspirin adherence and long-term stroke risk",
     None, None, None, {ASP, STROKE}),
    ("pmid-700047", "1969-04", "Chronic schizophrenia and early dementia: a clinical follow-up",
     None, None, None, {SCHIZ, DEMV}),
    ("pmid-700048", "1975-08", "Differential diagnosis of acute psychosis and schizophrenia",
     None, None, None, {PSY, SCHIZ}),
    ("pmid-700049", "1981-02", "First-episode psychosis progressing to schizophrenia",
     None, None, None, {PSY, SCHIZ}),
    ("pmid-700050", "1976-10", "Respiratory symptoms and asthma among habitual cannabis smokers",
     None, None, None, {ASTH, CANN}),
    ("pmid-700051", "2010-12", "Silent coronary artery disease in type 2 diabetes mellitus",
     None, None, None, {CAD, DIAB}),
    ("pmid-700052", "1972-06", "Exercise electrocardiography for suspected coronary artery disease",
     None, None, None, {ECG, CAD}),
    ("pmid-700053", "1964-05", "Electrocardiography in congestive heart failure",
     None, None, None, {ECG, HF}),
    ("pmid-700054", "1977-01", "Myocardial infarction in untreated hypertension",
     None, None, None, {MI, HYP}),
    ("pmid-700055", "2004-10",
     "Blood pressure control after myocardial infarction: hypertension management",
     None, None, None, {MI, HYP}),
    ("pmid-700056", "2008-04", "Stroke subtypes in patients with diabetes mellitus",
     None, None, None, {STROKE, DIAB}),
    ("pmid-700057", "2020-02", "Retinal imaging with optical coherence tomography in early dementia",
     None, None, None, {OCT, DEMV}),
    ("pmid-700058", "2021-04", "Obesity paradox in chronic heart failure",
     None, None, None, {OBES, HF}),
    ("pmid-700059", "1982-08", "Postprandial hyperglycemia in early obesity",
     None, None, None, {HYGLY, OBES}),
    # Single-concept documents: diagonal matrix entries only, no edges.
    ("pmid-710001", "1985", "Epidemiology of asthma in urban children",
     None, None, None, {ASTH}),
    ("pmid-710002", "1993-06", "The personal and economic burden of migraine",
     None, None, None, {MIG}),
    ("pmid-710003", "1968-09", "Advances in clinical electrocardiography",
     None, None, None, {ECG}),
    ("pmid-710004", "1963-03", "A measles epidemic in an island population",
     None, None, None, {MEAS}),
    # Encyclopedia filler pages.
    ("med-epilepsy", "2015", "Epilepsy",
     None,
     "Epilepsy causes repeated seizures. Some people also live with migraine, and the "
     "two conditions can be confused.",
     EPI, {EPI, MIG}),
    ("med-myocardial-infarction", "2018", "Myocardial infarction (heart attack)",
     None,
     "A myocardial infarction happens when blood flow to the heart stops. Doctors often "
     "prescribe aspirin and heparin in the first hours.",
     MI, {MI, ASP, HEP}),
    ("med-parkinson", "2021", "Parkinson disease",
     None,
     "Parkinson disease affects movement. Some people develop dementia in later stages.",
     PARK, {PARK, DEMV}),
    ("med-obesity", "2017", "Obesity",
     None,
     "Obesity raises the risk of diabetes mellitus and hypertension. Small weight "
     "changes improve both.",
     OBES, {OBES, DIAB, HYP}),
    ("med-measles", "2020", "Measles",
     None,
     "Measles is a highly contagious infection caused by the measles virus. Vaccination "
     "prevents it.",
     MEAS, {MEAS, MV}),
]

WEIGHTS = {"z_kind": "unit", "w": {"TT": 8, "TA": 4, "TF": 2, "AA": 2, "AF": 1, "FF": 1}}

# Small corpora for exhaustive-oracle tests: each must stay at 20 documents
# or fewer.
SMALL_CORPORA = {
    "takotsubo": [d for d in DOCS if d[0].startswith(("pmid-8500", "med-takotsubo"))],
    "glaucoma": [d for d in DOCS if d[0].startswith("pmid-3300")
                 or d[0] in ("med-cataract", "med-macular-degeneration", "med-glaucoma")],
    "measles": [d for d in DOCS if d[0].startswith("pmid-1900")],
}


def doc_json(doc) -> dict:
    doc_id, date, title, abstract, full_text, subject, _expected = doc
    record = {
        "doc_id": doc_id,
        "source_kind": "encyclopedia" if subject else "research",
        "title": title,
        "pub_date": date,
    }
    if abstract:
        record["abstract"] = abstract
    if full_text:
        record["full_text"] = full_text
    if subject:
        record["subject_concept"] = subject
        record["url"] = f"https://medencyclopedia.example.org/entry/{doc_id[4:]}"
    else:
        record["url"] = f"https://pubmed.example.org/{doc_id[5:]}/"
    return record


def corpus_lines(docs) -> list[str]:
    return [json.dumps(doc_json(d), ensure_ascii=False) for d in docs]


def check(condition, message):
    if not condition:
        raise SystemExit(f"fixture self-check failed: {message}")


def verify(dictionary_path, corpus_path):
    dictionary = load_dictionary(dictionary_path)
    check(len(dictionary.concepts) == len(CONCEPTS), "concept count mismatch")
    check(not dictionary.load_summary.ambiguities,
          f"ambiguous surfaces: {dictionary.load_summary.ambiguities}")

    lines = corpus_path.read_text(encoding="utf-8").splitlines()
    check(len(lines) == len(DOCS), "document count mismatch")

    # Every document must extract exactly its declared concept set.
    for doc, line in zip(DOCS, lines):
        record = parse_document_line(line)
        zones = extract_document(record, dictionary)
        got = zones.support_union()
        check(got == doc[6], f"{doc[0]}: extracted {sorted(got)}, expected {sorted(doc[6])}")

    cfg = WeightConfig.from_json_obj(WEIGHTS)
    build = build_index(lines, dictionary, cfg)
    check(build.stats.skipped == 0, "unexpected skipped documents")
    bundle = IndexBundle.from_build(build, dictionary, cfg)

    expected_tak = {
        HF: (3, True, "yellow"), MI: (2, True, "yellow"), ARR: (1, True, "yellow"),
        HYP: (2, False, "orange"), EPI: (3, False, "orange"),
        MIG: (2, False, "orange"), MS: (2, False, "orange"),
    }
    got_tak = {e.concept_id: (e.research_count, e.encyclopedia_hit, e.source_color)
               for e in neighbors(bundle, TAK, "T047")}
    check(got_tak == expected_tak, f"takotsubo neighbors: {got_tak}")

    expected_glau = {
        DR: (2, False, "orange"), CAT: (0, True, "green"),
        MD: (1, True, "yellow"), RD: (2, True, "yellow"),
    }
    got_glau = {e.concept_id: (e.research_count, e.encyclopedia_hit, e.source_color)
                for e in neighbors(bundle, GLAU, "T047")}
    check(got_glau == expected_glau, f"glaucoma neighbors: {got_glau}")

    pubs = edge_publications(bundle, MV, MS)
    check(pubs.decade_histogram == {1970: 3, 1980: 2, 2000: 1},
          f"measles decade histogram: {pubs.decade_histogram}")
    years = [item.year for item in pubs.items]
    check(years == sorted(years, reverse=True) and len(set(years)) == len(years),
          f"measles publication years not strictly descending: {years}")

    epi_edge = edge_publications(bundle, TAK, EPI)
    check([i.doc_id for i in epi_edge.items] == ["pmid-850011", "pmid-850010", "pmid-850009"],
          f"takotsubo-epilepsy postings: {[i.doc_id for i in epi_edge.items]}")

    tree = build_hierarchy(TAK, neighbors(bundle, TAK, "T047"), dictionary)
    top = [child.label for child in tree.children]
    check(top == ["Cardiovascular Diseases", "Nervous System Diseases"],
          f"takotsubo top-level categories: {top}")
    check(leaf_count(tree) == 7, f"takotsubo leaf count: {leaf_count(tree)}")
    check(tree.weight == 18, f"takotsubo root weight: {tree.weight}")

    # Equal inputs must save byte-identically.
    with tempfile.TemporaryDirectory() as tmp:
        first, second = Path(tmp) / "a", Path(tmp) / "b"
        save_index(bundle, first)
        rebuilt = IndexBundle.from_build(build_index(lines, dictionary, cfg), dictionary, cfg)
        save_index(rebuilt, second)
        for name in ("manifest.json", "dictionary.jsonl", "matrix.txt",
                     "evidence.txt", "documents.jsonl"):
            check((first / name).read_bytes() == (second / name).read_bytes(),
                  f"non-deterministic save: {name}")

    return bundle


def main() -> int:
    FIXTURES.mkdir(exist_ok=True)
    (FIXTURES / "small").mkdir(exist_ok=True)

    dict_lines = [
        json.dumps({"id": cid, "preferred_term": name, "synonyms": syns,
                    "tree_numbers": trees, "semantic_types": types}, ensure_ascii=False)
        for cid, name, syns, trees, types in CONCEPTS
    ]
    dictionary_path = FIXTURES / "dictionary.jsonl"
    dictionary_path.write_text("".join(line + "\n" for line in dict_lines), encoding="utf-8")

    corpus_path = FIXTURES / "corpus.jsonl"
    corpus_path.write_text("".join(line + "\n" for line in corpus_lines(DOCS)),
                           encoding="utf-8")

    (FIXTURES / "weights.json").write_text(json.dumps(WEIGHTS, indent=2) + "\n",
                                           encoding="utf-8")

    for name, docs in SMALL_CORPORA.items():
        check(len(docs) <= 20, f"small corpus {name} exceeds 20 documents")
        path = FIXTURES / "small" / f"{name}.jsonl"
        path.write_text("".join(line + "\n" for line in corpus_lines(docs)), encoding="utf-8")

    bundle = verify(dictionary_path, corpus_path)
    print(f"fixtures ok: {len(CONCEPTS)} concepts, {len(DOCS)} documents, "
          f"{bundle.stats.distinct_edges} edges, {len(bundle.matrix)} matrix entries")
    return 0


if __name__ == "__main__":
    sys.exit(main())
