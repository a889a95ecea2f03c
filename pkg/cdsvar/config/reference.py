# -*- coding: utf-8 -*-

"""
cdsvar.config.reference
~~~~~~~~~~~~~~~~~~~~~~~

This module contains the reference data of the thirteen French firms studied over
2001-2008: observation windows, sectors and market capitalizations at 23/04/2007, plus
the causal pattern the Granger tests found on them.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""


class StudyReference:
    """Firm characteristics used to shape the synthetic batch

    Each firm entry is ``(entity_id, name, sector, market_cap_eur, window_start,
    window_end, cap_weight_pct)``. Weights are the reference percentage column and are
    kept only to check the computed weights against.

    Usage::
        >>> from cdsvar.config.reference import StudyReference
        >>> len(StudyReference.firms())
        13
    """

    @staticmethod
    def firms() -> list:
        """Table of the thirteen reference entities"""

        return [
            ("ALCATEL", "Alcatel", "Communications Equipment",
             21480016011.30, "2001-06-26", "2008-02-21", 3.61),
            ("SANOFI", "Sanofi-Aventis", "Pharmaceutical Industry",
             90959774639.53, "2001-09-04", "2008-02-21", 15.28),
            ("BNP", "BNP Paribas", "Banks",
             79761110895.00, "2001-09-03", "2008-02-21", 13.40),
            ("BOUYGUES", "Bouygues", "Construction and Related Machinery",
             20043133894.21, "2002-06-19", "2008-02-21", 3.37),
            ("CARREFOUR", "Carrefour", "Grocery Stores",
             40574200332.96, "2001-09-04", "2008-02-21", 6.82),
            ("DANONE", "Danone", "Packaged Foods",
             32396792805.74, "2001-09-04", "2008-02-21", 5.44),
            ("FTE", "France Telecom", "Integrated Telecommunication Services",
             54713063223.00, "2001-08-29", "2008-02-21", 9.19),
            ("PPR", "Pinault PR", "Department Stores",
             16314170907.18, "2002-03-15", "2008-02-21", 2.74),
            ("RHODIA", "Rhodia", "Specialty Chemicals",
             3588474798.52, "2002-03-25", "2008-02-21", 0.60),
            ("RENAULT", "Renault", "Automobile",
             26539043170.52, "2001-08-29", "2008-02-21", 4.46),
            ("SOCGEN", "Societe Generale", "Banks",
             69836607458.70, "2001-09-03", "2008-02-21", 11.73),
            ("SODEXHO", "Sodexho", "Restaurants",
             8981811806.24, "2002-07-22", "2008-02-21", 1.51),
            ("TOTAL", "Total", "Integrated Oil & Gas",
             129927028347.90, "2001-09-04", "2008-02-21", 21.83),
        ]

    @staticmethod
    def rs_to_dcds_entities() -> list:
        """Entities with share-return to CDS causality (11 of 13)"""

        return [
            "ALCATEL", "SANOFI", "BNP", "BOUYGUES", "CARREFOUR", "FTE",
            "PPR", "RHODIA", "RENAULT", "SOCGEN", "SODEXHO",
        ]

    @staticmethod
    def dcds_to_dbond_entities() -> list:
        """Entities with CDS to bond-spread causality (8 of 13, following the narrative count)"""

        return [
            "ALCATEL", "BOUYGUES", "DANONE", "FTE", "PPR", "RHODIA", "RENAULT", "SOCGEN",
        ]

    @staticmethod
    def reference_correlations() -> dict:
        """Average correlations 2001-2007, used as sign references only"""

        return {
            ("RS", "DBOND"): -0.0765,
            ("RS", "DCDS"): -0.1124,
            ("DBOND", "DCDS"): 0.0641,
        }

    @staticmethod
    def france_telecom_contracts() -> dict:
        """The two worked France Telecom CDS quotes, 08/02/2007 and 26/06/2002"""

        return {
            "2007": {
                "entity": "FTE",
                "notional": 10000000.0,
                "spread_bp": 23.5,
                "tenor_years": 5,
                "payments_per_year": 4,
                "recovery_rate": 0.4,
            },
            "2002": {
                "entity": "FTE",
                "notional": 10000000.0,
                "spread_bp": 730.0,
                "tenor_years": 5,
                "payments_per_year": 4,
                "recovery_rate": 0.4,
            },
        }
